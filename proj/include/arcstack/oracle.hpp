#pragma once

#include "arcstack/rat.hpp"

#include <functional>
#include <string>
#include <vector>

namespace arcstack {

using Window = std::vector<long>;  // sorted sample points

struct OracleConfig {
    long horizon = 512;        // largest sample point
    long dense_prefix = 64;    // 0..dense_prefix-1 sampled densely
    int per_octave = 8;        // samples per octave past the dense prefix
    std::size_t min_size = 32; // smallest acceptable homogeneous subset
    unsigned long seed = 0;    // recorded; the default strategy is deterministic
};

struct OracleDecision {
    std::string label;
    std::size_t in_size = 0;
    std::size_t out_size = 0;
    std::string choice;
};

// Finite-horizon stand-in for a selective ultrafilter. Every "there exists
// B in p" step of the construction becomes a logged refinement of an explicit
// sample window; "A in p" queries become majority decisions on the window.
class FilterOracle {
public:
    explicit FilterOracle(OracleConfig cfg = {});

    const OracleConfig& config() const { return cfg_; }
    const Window& universe() const { return universe_; }
    const std::vector<OracleDecision>& log() const { return log_; }

    // Largest class wins, ties to the smallest tag. Throws HorizonExhausted
    // when the winner is below min_size.
    Window refine_partition(const std::string& label, const Window& a,
                            const std::function<int(long)>& tag);

    enum class OrderMode { MonotoneOrConstant, OneToOneOrConstant };

    // Subset on which the sequence is constant or strictly monotone (resp.
    // one-to-one). Idempotent on already homogeneous inputs.
    Window refine_order(const std::string& label, const Window& a,
                        const std::function<Rat(long)>& value, OrderMode mode);

    // Majority decision standing in for "A in p" relative to the window w.
    bool often(const Window& w, const std::function<bool(long)>& pred) const;

    void note(const std::string& label, std::size_t in, std::size_t out, std::string choice);

private:
    OracleConfig cfg_;
    Window universe_;
    std::vector<OracleDecision> log_;
};

// Set helpers on sorted windows.
Window window_filter(const Window& w, const std::function<bool(long)>& keep);
bool window_contains(const Window& w, long n);

}  // namespace arcstack
