#include "ncdde/history.hpp"

#include <algorithm>
#include <cmath>

#include "ncdde/errors.hpp"

namespace ncdde {

HistoryBuffer::HistoryBuffer(double window, double maxStep)
    : window_(window), maxStep_(maxStep), newestQueried_(-1e300) {
    if (!(window > 0.0)) throw ConfigError("HistoryBuffer: window must be positive");
    if (!(maxStep > 0.0)) throw ConfigError("HistoryBuffer: maxStep must be positive");
}

void HistoryBuffer::push(double t, SpectralField u, SpectralField du) {
    if (u.size() != du.size())
        throw ShapeError("HistoryBuffer::push: state and derivative sizes differ");
    if (!knots_.empty()) {
        const double tNew = knots_.back().t;
        if (!(t > tNew))
            throw OrderingError("HistoryBuffer::push: non-monotone knot time");
        if (t - tNew > maxStep_ * (1.0 + 1e-9))
            throw OrderingError("HistoryBuffer::push: spacing exceeds declared max step");
        if (u.size() != knots_.back().u.size())
            throw ShapeError("HistoryBuffer::push: field size differs from stored knots");
    }
    knots_.push_back(Knot{t, std::move(u), std::move(du)});
    const double cutoff = knots_.back().t - window_ - 2.0 * maxStep_;
    while (knots_.size() > 2 && knots_.front().t < cutoff) knots_.pop_front();
}

double HistoryBuffer::newestTime() const {
    if (knots_.empty()) throw CoverageError("HistoryBuffer: empty");
    return knots_.back().t;
}

double HistoryBuffer::oldestTime() const {
    if (knots_.empty()) throw CoverageError("HistoryBuffer: empty");
    return knots_.front().t;
}

bool HistoryBuffer::covers(double from, double to) const {
    if (knots_.empty()) return false;
    const double slack = 1e-9 * std::max(1.0, std::abs(to));
    return knots_.front().t <= from + slack && knots_.back().t >= to - slack;
}

SpectralField HistoryBuffer::sampleAt(double s) const {
    SpectralField out(knots_.empty() ? 0 : knots_.front().u.size());
    sampleInto(s, out);
    return out;
}

void HistoryBuffer::sampleInto(double s, SpectralField& out) const {
    if (knots_.empty()) throw CoverageError("HistoryBuffer::sampleAt: empty buffer");
    const double lo = knots_.front().t;
    const double hi = knots_.back().t;
    const double slack = 1e-9 * std::max(1.0, std::abs(s));
    if (s < lo - slack || s > hi + maxStep_ + slack)
        throw CoverageError("HistoryBuffer::sampleAt: time outside covered range");
    newestQueried_ = std::max(newestQueried_, s);

    const std::size_t n = knots_.front().u.size();
    if (out.size() != n) out = SpectralField(n);

    if (s == hi) {
        out.coeffs = knots_.back().u.coeffs;
        return;
    }
    if (knots_.size() == 1) {
        // single knot: tangent-line extension
        const Knot& k = knots_.back();
        const double d = s - k.t;
        for (std::size_t i = 0; i < n; ++i)
            out.coeffs[i] = k.u.coeffs[i] + d * k.du.coeffs[i];
        return;
    }

    // locate the bracketing interval; queries past the newest knot reuse the
    // final interval's cubic
    std::size_t hiIdx = knots_.size() - 1;
    if (s < hi) {
        std::size_t loIdx = 0;
        std::size_t hiSearch = knots_.size() - 1;
        while (hiSearch - loIdx > 1) {
            const std::size_t mid = (loIdx + hiSearch) / 2;
            if (knots_[mid].t <= s)
                loIdx = mid;
            else
                hiSearch = mid;
        }
        hiIdx = hiSearch;
    }
    const Knot& a = knots_[hiIdx - 1];
    const Knot& b = knots_[hiIdx];
    const double h = b.t - a.t;
    const double x = (s - a.t) / h;
    // Hermite basis on [0, 1]
    const double x2 = x * x;
    const double x3 = x2 * x;
    const double h00 = 2.0 * x3 - 3.0 * x2 + 1.0;
    const double h10 = x3 - 2.0 * x2 + x;
    const double h01 = -2.0 * x3 + 3.0 * x2;
    const double h11 = x3 - x2;
    for (std::size_t i = 0; i < n; ++i)
        out.coeffs[i] = h00 * a.u.coeffs[i] + h10 * h * a.du.coeffs[i] +
                        h01 * b.u.coeffs[i] + h11 * h * b.du.coeffs[i];
}

namespace {

struct SampleNorms {
    double l2sq, gradsq, deltasq, sigsq, sigplussq, epsAbs;
};

}  // namespace

WindowNorms windowNorms(const HistoryBuffer& buffer, double t, const BasisTable& basis,
                        double sigma, const EpsilonFn& epsilon, int subsamples) {
    if (!buffer.covers(t - buffer.window(), t))
        throw CoverageError("windowNorms: buffer does not cover [t - mu, t]");
    if (subsamples < 0) subsamples = 0;

    const double mu = buffer.window();
    const double tLo = t - mu;

    // collect sample times: all knots inside the window, the window endpoints,
    // and `subsamples` interior points per consecutive pair
    std::vector<double> times;
    times.push_back(tLo);
    for (std::size_t i = 0; i < buffer.size(); ++i) {
        const double tk = buffer.knot(i).t;
        if (tk > tLo + 1e-14 && tk < t - 1e-14) times.push_back(tk);
    }
    times.push_back(t);
    std::vector<double> dense;
    dense.reserve(times.size() * (subsamples + 1) + 1);
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        dense.push_back(times[i]);
        const double h = times[i + 1] - times[i];
        for (int k = 1; k <= subsamples; ++k)
            dense.push_back(times[i] + h * k / (subsamples + 1.0));
    }
    dense.push_back(times.back());

    WindowNorms w;
    double maxPointwiseHt = 0.0, maxPointwiseHt1 = 0.0, maxPointwiseHtSig = 0.0;
    SpectralField u(basis.size());
    for (double s : dense) {
        buffer.sampleInto(s, u);
        double l2sq = 0, gradsq = 0, deltasq = 0, sigsq = 0, sigplussq = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double c2 = u.coeffs[i] * u.coeffs[i];
            const double lam = basis.modes[i].eigenvalue;
            l2sq += c2;
            gradsq += lam * c2;
            deltasq += lam * lam * c2;
            const double ls = std::pow(lam, sigma);
            sigsq += ls * c2;
            sigplussq += ls * lam * c2;
        }
        w.supL2 = std::max(w.supL2, l2sq);
        w.supGrad = std::max(w.supGrad, gradsq);
        w.supDelta = std::max(w.supDelta, deltasq);
        w.supSigma = std::max(w.supSigma, sigsq);
        w.supSigmaPlus = std::max(w.supSigmaPlus, sigplussq);
        const double epsAbs = std::abs(epsilon(s).first);
        maxPointwiseHt = std::max(maxPointwiseHt, l2sq + epsAbs * gradsq);
        maxPointwiseHt1 = std::max(maxPointwiseHt1, gradsq + epsAbs * deltasq);
        maxPointwiseHtSig = std::max(maxPointwiseHtSig, sigsq + epsAbs * sigplussq);
    }
    const double epsNow = std::abs(epsilon(t).first);
    w.ht = w.supL2 + epsNow * w.supGrad;
    w.ht1 = w.supGrad + epsNow * w.supDelta;
    w.htSigma = w.supSigma + epsNow * w.supSigmaPlus;
    w.htPointwise = maxPointwiseHt;
    w.ht1Pointwise = maxPointwiseHt1;
    w.htSigmaPointwise = maxPointwiseHtSig;
    // sup entries are stored squared during accumulation; expose norms
    w.supL2 = std::sqrt(w.supL2);
    w.supGrad = std::sqrt(w.supGrad);
    w.supDelta = std::sqrt(w.supDelta);
    w.supSigma = std::sqrt(w.supSigma);
    w.supSigmaPlus = std::sqrt(w.supSigmaPlus);
    return w;
}

double windowSupNorm(const HistoryBuffer& buffer, double t, WindowNormKind kind,
                     const BasisTable& basis, double sigma, const EpsilonFn& epsilon,
                     int subsamples) {
    const WindowNorms w = windowNorms(buffer, t, basis, sigma, epsilon, subsamples);
    switch (kind) {
        case WindowNormKind::L2: return w.supL2;
        case WindowNormKind::GradL2: return w.supGrad;
        case WindowNormKind::DeltaL2: return w.supDelta;
        case WindowNormKind::FractionalSigma: return w.supSigma;
        case WindowNormKind::CompositeHt: return w.ht;
        case WindowNormKind::CompositeHt1: return w.ht1;
        case WindowNormKind::CompositeHtSigma: return w.htSigma;
    }
    return 0.0;
}

}  // namespace ncdde
