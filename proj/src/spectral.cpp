#include "ncdde/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ncdde/errors.hpp"

namespace ncdde {

namespace {
constexpr double kPi = std::numbers::pi;

int defaultQuadPoints(int modes) {
    // 3/2-rule grid rounded up, never below the 2N floor
    const int threeHalves = (3 * modes + 1) / 2;
    return std::max(2 * modes, threeHalves);
}
}  // namespace

DomainSpec DomainSpec::interval(double length, int modes, int quadPoints) {
    DomainSpec d;
    d.dims = 1;
    d.lengths = {length};
    d.modes = {modes};
    d.quadraturePoints = {quadPoints > 0 ? quadPoints : defaultQuadPoints(modes)};
    d.validate();
    return d;
}

DomainSpec DomainSpec::rectangle(double lx, double ly, int modesX, int modesY,
                                 int quadX, int quadY) {
    DomainSpec d;
    d.dims = 2;
    d.lengths = {lx, ly};
    d.modes = {modesX, modesY};
    d.quadraturePoints = {quadX > 0 ? quadX : defaultQuadPoints(modesX),
                          quadY > 0 ? quadY : defaultQuadPoints(modesY)};
    d.validate();
    return d;
}

int DomainSpec::totalModes() const {
    int n = 1;
    for (int m : modes) n *= m;
    return n;
}

int DomainSpec::totalQuadraturePoints() const {
    int n = 1;
    for (int q : quadraturePoints) n *= q;
    return n;
}

void DomainSpec::validate() const {
    if (dims != 1 && dims != 2)
        throw ConfigError("domain dims must be 1 or 2");
    if (static_cast<int>(lengths.size()) != dims ||
        static_cast<int>(modes.size()) != dims ||
        static_cast<int>(quadraturePoints.size()) != dims)
        throw ConfigError("domain axis arrays must have one entry per dimension");
    for (int a = 0; a < dims; ++a) {
        if (!(lengths[a] > 0.0)) throw ConfigError("domain lengths must be positive");
        if (modes[a] < 1) throw ConfigError("domain modes must be >= 1");
        if (quadraturePoints[a] < 2 * modes[a])
            throw ConfigError("quadraturePoints must be >= 2*modes per axis");
    }
}

BasisTable buildBasis(const DomainSpec& domain) {
    domain.validate();
    BasisTable table;
    if (domain.dims == 1) {
        const double l = domain.lengths[0];
        const double norm = std::sqrt(2.0 / l);
        table.modes.reserve(domain.modes[0]);
        for (int j = 1; j <= domain.modes[0]; ++j) {
            Mode m;
            m.index = {j, 0};
            m.eigenvalue = (j * kPi / l) * (j * kPi / l);
            m.normalization = norm;
            table.modes.push_back(m);
        }
        return table;  // already ascending in 1D
    }
    const double l1 = domain.lengths[0];
    const double l2 = domain.lengths[1];
    const double norm = std::sqrt(2.0 / l1) * std::sqrt(2.0 / l2);
    table.modes.reserve(static_cast<std::size_t>(domain.totalModes()));
    for (int j = 1; j <= domain.modes[0]; ++j) {
        for (int k = 1; k <= domain.modes[1]; ++k) {
            Mode m;
            m.index = {j, k};
            m.eigenvalue = (j * kPi / l1) * (j * kPi / l1) + (k * kPi / l2) * (k * kPi / l2);
            m.normalization = norm;
            table.modes.push_back(m);
        }
    }
    std::sort(table.modes.begin(), table.modes.end(), [](const Mode& a, const Mode& b) {
        if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
        return a.index < b.index;
    });
    return table;
}

SpectralField SpectralField::unitMode(std::size_t n, std::size_t mode) {
    SpectralField f(n);
    f.coeffs.at(mode) = 1.0;
    return f;
}

bool SpectralField::allFinite() const {
    for (double c : coeffs)
        if (!std::isfinite(c)) return false;
    return true;
}

namespace {
void requireAligned(const SpectralField& a, const SpectralField& b, const char* op) {
    if (a.size() != b.size())
        throw ShapeError(std::string(op) + ": field sizes differ");
}
}  // namespace

void axpy(double a, const SpectralField& x, SpectralField& y) {
    requireAligned(x, y, "axpy");
    for (std::size_t i = 0; i < x.size(); ++i) y.coeffs[i] += a * x.coeffs[i];
}

SpectralField add(const SpectralField& a, const SpectralField& b) {
    requireAligned(a, b, "add");
    SpectralField out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

SpectralField subtract(const SpectralField& a, const SpectralField& b) {
    requireAligned(a, b, "subtract");
    SpectralField out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

SpectralField scale(const SpectralField& a, double s) {
    SpectralField out = a;
    for (double& c : out.coeffs) c *= s;
    return out;
}

double innerProduct(const SpectralField& f, const SpectralField& g) {
    requireAligned(f, g, "innerProduct");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f.coeffs[i] * g.coeffs[i];
    return acc;
}

double normSobolev(const SpectralField& f, const BasisTable& basis, double s) {
    if (f.size() != basis.size())
        throw ShapeError("normSobolev: field not aligned with basis");
    if (s < 0.0) throw ConfigError("normSobolev: negative order out of scope");
    double acc = 0.0;
    if (s == 0.0) {
        for (double c : f.coeffs) acc += c * c;
    } else {
        for (std::size_t i = 0; i < f.size(); ++i)
            acc += std::pow(basis.modes[i].eigenvalue, s) * f.coeffs[i] * f.coeffs[i];
    }
    return std::sqrt(acc);
}

SpectralField applyA(const SpectralField& f, const BasisTable& basis, double power) {
    if (f.size() != basis.size())
        throw ShapeError("applyA: field not aligned with basis");
    SpectralField out = f;
    for (std::size_t i = 0; i < f.size(); ++i)
        out.coeffs[i] *= std::pow(basis.modes[i].eigenvalue, power);
    return out;
}

SineTransform::SineTransform(const DomainSpec& domain)
    : domain_(domain), basis_(buildBasis(domain)) {
    weight_ = 1.0;
    for (int a = 0; a < domain_.dims; ++a) {
        const double l = domain_.lengths[a];
        const int M = domain_.quadraturePoints[a];
        const int N = domain_.modes[a];
        const double h = l / M;
        weight_ *= h;
        grid_[a].resize(M);
        eval_[a].resize(static_cast<std::size_t>(M) * N);
        const double norm = std::sqrt(2.0 / l);
        for (int m = 0; m < M; ++m) {
            const double x = (m + 0.5) * h;
            grid_[a][m] = x;
            for (int j = 0; j < N; ++j)
                eval_[a][static_cast<std::size_t>(m) * N + j] =
                    norm * std::sin((j + 1) * kPi * x / l);
        }
    }
    sortedToTensor_.resize(basis_.size());
    if (domain_.dims == 1) {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            sortedToTensor_[i] = basis_.modes[i].index[0] - 1;
    } else {
        const int N2 = domain_.modes[1];
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const auto& idx = basis_.modes[i].index;
            sortedToTensor_[i] = (idx[0] - 1) * N2 + (idx[1] - 1);
        }
    }
}

std::vector<double> SineTransform::toPhysical(const SpectralField& f) const {
    if (f.size() != basis_.size())
        throw ShapeError("toPhysical: field not aligned with domain basis");
    if (domain_.dims == 1) {
        const int M = domain_.quadraturePoints[0];
        const int N = domain_.modes[0];
        std::vector<double> out(M, 0.0);
        for (int m = 0; m < M; ++m) {
            const double* row = &eval_[0][static_cast<std::size_t>(m) * N];
            double acc = 0.0;
            for (int j = 0; j < N; ++j) acc += row[j] * f.coeffs[j];
            out[m] = acc;
        }
        return out;
    }
    const int M1 = domain_.quadraturePoints[0], M2 = domain_.quadraturePoints[1];
    const int N1 = domain_.modes[0], N2 = domain_.modes[1];
    // scatter sorted coefficients into the tensor layout
    std::vector<double> tensor(static_cast<std::size_t>(N1) * N2, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) tensor[sortedToTensor_[i]] = f.coeffs[i];
    // contract axis 1: tmp[j][n] = sum_k tensor[j][k] e2_k(y_n)
    std::vector<double> tmp(static_cast<std::size_t>(N1) * M2, 0.0);
    for (int j = 0; j < N1; ++j)
        for (int n = 0; n < M2; ++n) {
            const double* row = &eval_[1][static_cast<std::size_t>(n) * N2];
            double acc = 0.0;
            for (int k = 0; k < N2; ++k) acc += tensor[static_cast<std::size_t>(j) * N2 + k] * row[k];
            tmp[static_cast<std::size_t>(j) * M2 + n] = acc;
        }
    // contract axis 0: out[m][n] = sum_j e1_j(x_m) tmp[j][n]
    std::vector<double> out(static_cast<std::size_t>(M1) * M2, 0.0);
    for (int m = 0; m < M1; ++m) {
        const double* row = &eval_[0][static_cast<std::size_t>(m) * N1];
        for (int j = 0; j < N1; ++j) {
            const double a = row[j];
            const double* src = &tmp[static_cast<std::size_t>(j) * M2];
            double* dst = &out[static_cast<std::size_t>(m) * M2];
            for (int n = 0; n < M2; ++n) dst[n] += a * src[n];
        }
    }
    return out;
}

SpectralField SineTransform::fromPhysical(const std::vector<double>& samples) const {
    if (static_cast<int>(samples.size()) != domain_.totalQuadraturePoints())
        throw ShapeError("fromPhysical: sample count does not match quadrature grid");
    if (domain_.dims == 1) {
        const int M = domain_.quadraturePoints[0];
        const int N = domain_.modes[0];
        SpectralField f(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j) {
            double acc = 0.0;
            for (int m = 0; m < M; ++m)
                acc += eval_[0][static_cast<std::size_t>(m) * N + j] * samples[m];
            f.coeffs[j] = weight_ * acc;
        }
        return f;
    }
    const int M1 = domain_.quadraturePoints[0], M2 = domain_.quadraturePoints[1];
    const int N1 = domain_.modes[0], N2 = domain_.modes[1];
    // contract axis 1 first: tmp[m][k] = sum_n samples[m][n] e2_k(y_n)
    std::vector<double> tmp(static_cast<std::size_t>(M1) * N2, 0.0);
    for (int m = 0; m < M1; ++m)
        for (int k = 0; k < N2; ++k) {
            double acc = 0.0;
            for (int n = 0; n < M2; ++n)
                acc += samples[static_cast<std::size_t>(m) * M2 + n] *
                       eval_[1][static_cast<std::size_t>(n) * N2 + k];
            tmp[static_cast<std::size_t>(m) * N2 + k] = acc;
        }
    std::vector<double> tensor(static_cast<std::size_t>(N1) * N2, 0.0);
    for (int j = 0; j < N1; ++j)
        for (int k = 0; k < N2; ++k) {
            double acc = 0.0;
            for (int m = 0; m < M1; ++m)
                acc += eval_[0][static_cast<std::size_t>(m) * N1 + j] *
                       tmp[static_cast<std::size_t>(m) * N2 + k];
            tensor[static_cast<std::size_t>(j) * N2 + k] = weight_ * acc;
        }
    SpectralField f(basis_.size());
    for (std::size_t i = 0; i < f.size(); ++i) f.coeffs[i] = tensor[sortedToTensor_[i]];
    return f;
}

double SineTransform::quadratureIntegral(const std::vector<double>& samples) const {
    if (static_cast<int>(samples.size()) != domain_.totalQuadraturePoints())
        throw ShapeError("quadratureIntegral: sample count mismatch");
    double acc = 0.0;
    for (double s : samples) acc += s;
    return weight_ * acc;
}

double SineTransform::quadratureL2(const std::vector<double>& samples) const {
    if (static_cast<int>(samples.size()) != domain_.totalQuadraturePoints())
        throw ShapeError("quadratureL2: sample count mismatch");
    double acc = 0.0;
    for (double s : samples) acc += s * s;
    return std::sqrt(weight_ * acc);
}

std::vector<double> toPhysical(const SpectralField& f, const DomainSpec& domain) {
    return SineTransform(domain).toPhysical(f);
}

SpectralField fromPhysical(const std::vector<double>& samples, const DomainSpec& domain) {
    return SineTransform(domain).fromPhysical(samples);
}

}  // namespace ncdde
