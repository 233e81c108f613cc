#ifndef CYCLEQUIV_STAGE_TIMER_HPP
#define CYCLEQUIV_STAGE_TIMER_HPP

#include <array>
#include <chrono>
#include <cstddef>
#include <string_view>

namespace cyclequiv {

/// Pipeline stages, in execution order.
enum class Stage : std::size_t {
    Ancestry,
    CmagPart1,
    CmagPart2,
    CpagInit,
    UStructures,
    CpagPart2,
};

inline constexpr std::size_t stage_count = 6;

std::string_view stage_name(Stage s);

/// Wall-clock microseconds per stage.
struct StageTimings {
    std::array<double, stage_count> micros{};

    double& operator[](Stage s) { return micros[static_cast<std::size_t>(s)]; }
    double operator[](Stage s) const { return micros[static_cast<std::size_t>(s)]; }
    double sum() const;

    friend bool operator==(const StageTimings&, const StageTimings&) = default;
};

/// Adds the elapsed time of its scope to one stage; a null sink disables it.
class ScopedStage {
public:
    ScopedStage(StageTimings* sink, Stage stage)
        : sink_(sink), stage_(stage), start_(std::chrono::steady_clock::now()) {}
    ~ScopedStage() {
        if (sink_ != nullptr) {
            const auto elapsed = std::chrono::steady_clock::now() - start_;
            (*sink_)[stage_] += std::chrono::duration<double, std::micro>(elapsed).count();
        }
    }
    ScopedStage(const ScopedStage&) = delete;
    ScopedStage& operator=(const ScopedStage&) = delete;

private:
    StageTimings* sink_;
    Stage stage_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace cyclequiv

#endif  // CYCLEQUIV_STAGE_TIMER_HPP
