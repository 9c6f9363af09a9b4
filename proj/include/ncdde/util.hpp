// Small numeric and infrastructure helpers: quadrature on uniform grids,
// least-squares line fits, a deterministic RNG stream, a bounded worker pool,
// and printf-style double formatting used by every CSV writer.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ncdde {

// Composite Simpson integral of samples on a uniform grid with spacing h.
// Odd interval counts are closed with a 3/8 panel at the right end; a single
// interval falls back to the trapezoid rule.
double simpsonUniform(const std::vector<double>& samples, double h);

// Same, restricted to the index range [i0, i1].
double simpsonUniform(const std::vector<double>& samples, double h,
                      std::size_t i0, std::size_t i1);

// Least-squares fit y ~ a + b*x. Returns {intercept, slope}.
struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
};
LineFit fitLine(const std::vector<double>& x, const std::vector<double>& y);

// Deterministic 64-bit RNG (splitmix64 core). The standard distributions are
// implementation-defined, so uniforms are derived from raw bits directly.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    double uniform01();                       // [0, 1)
    double uniform(double lo, double hi);     // [lo, hi)

    // Derives an independent stream for ensemble member `index`.
    static DetRng forMember(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be written
// to pre-sized per-index slots; the call joins before returning, so the
// aggregate is deterministic regardless of the thread count.
void parallelFor(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Shortest round-trip decimal form of a double ("%.17g" with trailing-zero
// trimming is deliberately NOT applied; the fixed format keeps CSV bodies
// byte-identical between runs).
std::string formatDouble(double v);

// FNV-1a 64-bit over a byte string, rendered as 16 hex digits.
std::string fnv1aHex(const std::string& bytes);

// Collects human-readable notices emitted during validation or analysis.
class NoticeLog {
  public:
    void add(std::string msg) { messages_.push_back(std::move(msg)); }
    const std::vector<std::string>& messages() const { return messages_; }
    bool empty() const { return messages_.empty(); }

  private:
    std::vector<std::string> messages_;
};

}  // namespace ncdde
