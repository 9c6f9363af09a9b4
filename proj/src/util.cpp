#include "ncdde/util.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace ncdde {

double simpsonUniform(const std::vector<double>& samples, double h) {
    if (samples.empty()) return 0.0;
    return simpsonUniform(samples, h, 0, samples.size() - 1);
}

double simpsonUniform(const std::vector<double>& samples, double h,
                      std::size_t i0, std::size_t i1) {
    if (i1 >= samples.size() || i0 > i1)
        throw std::out_of_range("simpsonUniform: bad index range");
    const std::size_t n = i1 - i0;  // interval count
    if (n == 0) return 0.0;
    if (n == 1) return 0.5 * h * (samples[i0] + samples[i1]);

    double total = 0.0;
    std::size_t end = i1;
    if (n % 2 != 0) {
        // close the last three intervals with a 3/8 panel
        end = i1 - 3;
        total += 3.0 * h / 8.0 *
                 (samples[i1 - 3] + 3.0 * samples[i1 - 2] + 3.0 * samples[i1 - 1] + samples[i1]);
        if (end == i0) return total;
    }
    double acc = samples[i0] + samples[end];
    for (std::size_t i = i0 + 1; i < end; ++i)
        acc += (((i - i0) % 2 == 1) ? 4.0 : 2.0) * samples[i];
    total += h / 3.0 * acc;
    return total;
}

LineFit fitLine(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("fitLine: mismatched or empty inputs");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    LineFit fit;
    if (denom == 0.0) {
        fit.intercept = sy / n;
        fit.slope = 0.0;
    } else {
        fit.slope = (n * sxy - sx * sy) / denom;
        fit.intercept = (sy - fit.slope * sx) / n;
    }
    return fit;
}

std::uint64_t DetRng::next() {
    // splitmix64
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double DetRng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double DetRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

DetRng DetRng::forMember(std::uint64_t seed, std::uint64_t index) {
    DetRng base(seed ^ (0xA24BAED4963EE407ULL * (index + 1)));
    base.next();
    return base;
}

void parallelFor(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(n, static_cast<std::size_t>(jobs < 1 ? 1 : jobs));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

std::string formatDouble(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fnv1aHex(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ncdde
