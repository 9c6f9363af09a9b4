// Dense-output record of a trajectory on a sliding window [t - mu, t].
// Knots store the state and its time derivative, so per-coefficient cubic
// Hermite interpolation reproduces cubic trajectories exactly and carries the
// integrator's fourth-order accuracy into delay evaluation.

#pragma once

#include <deque>
#include <functional>

#include "ncdde/spectral.hpp"

namespace ncdde {

// (value, derivative) of the time-dependent coefficient epsilon at time t.
using EpsilonFn = std::function<std::pair<double, double>(double)>;

class HistoryBuffer {
  public:
    struct Knot {
        double t;
        SpectralField u;
        SpectralField du;
    };

    // window: retention span behind the newest knot (the delay horizon mu).
    // maxStep: declared upper bound on knot spacing; also the extrapolation
    // margin for stage evaluations past the newest knot.
    HistoryBuffer(double window, double maxStep);

    void push(double t, SpectralField u, SpectralField du);

    // Cubic Hermite sample. Accepts s in [oldest, newest + margin]; queries in
    // (newest, newest + margin] extend the final segment's cubic, which is what
    // stage evaluations inside the current step rely on.
    SpectralField sampleAt(double s) const;
    void sampleInto(double s, SpectralField& out) const;

    double newestTime() const;
    double oldestTime() const;
    bool covers(double from, double to) const;
    bool empty() const { return knots_.empty(); }
    std::size_t size() const { return knots_.size(); }
    const Knot& knot(std::size_t i) const { return knots_[i]; }
    double window() const { return window_; }
    double maxStep() const { return maxStep_; }

    // High-water mark of sample times, used to audit causality.
    double newestQueried() const { return newestQueried_; }

  private:
    double window_;
    double maxStep_;
    std::deque<Knot> knots_;
    mutable double newestQueried_;
};

// Windowed sup norms over [t - mu, t] per the time-dependent space
// definitions. The composite entries come in two conventions (an ambiguity in
// the epsilon-weighting of the window): `ht*` freezes |epsilon| at the current
// time t and pairs it with the separate gradient sup; `htPointwise*` takes the
// sup of the pointwise-weighted combination over the window. Both are
// reported.
struct WindowNorms {
    double supL2 = 0.0;         // max ||u||
    double supGrad = 0.0;       // max ||grad u||
    double supDelta = 0.0;      // max ||Delta u||
    double supSigma = 0.0;      // max ||A^(sigma/2) u||
    double supSigmaPlus = 0.0;  // max ||A^((1+sigma)/2) u||

    double ht = 0.0;             // supL2^2 + |eps(t)| supGrad^2
    double htPointwise = 0.0;    // max over window of ||u||^2 + |eps| ||grad u||^2
    double ht1 = 0.0;            // supGrad^2 + |eps(t)| supDelta^2
    double ht1Pointwise = 0.0;
    double htSigma = 0.0;        // supSigma^2 + |eps(t)| supSigmaPlus^2
    double htSigmaPointwise = 0.0;
};

enum class WindowNormKind { L2, GradL2, DeltaL2, FractionalSigma, CompositeHt, CompositeHt1, CompositeHtSigma };

// Evaluates all windowed norms at once on knots plus `subsamples` interior
// points per knot interval. Requires the buffer to cover [t - mu, t].
WindowNorms windowNorms(const HistoryBuffer& buffer, double t, const BasisTable& basis,
                        double sigma, const EpsilonFn& epsilon, int subsamples = 4);

// Single-entry access matching the operation-level contract.
double windowSupNorm(const HistoryBuffer& buffer, double t, WindowNormKind kind,
                     const BasisTable& basis, double sigma, const EpsilonFn& epsilon,
                     int subsamples = 4);

}  // namespace ncdde
