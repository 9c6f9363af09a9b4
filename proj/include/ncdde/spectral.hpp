// Analytic Dirichlet sine eigenbasis on intervals and rectangles, with
// forward/inverse pseudo-spectral transforms and the spectral Sobolev norms.
//
// Basis functions are L2-orthonormal: in 1D on (0, l),
//     e_j(x) = sqrt(2/l) sin(j pi x / l),   lambda_j = (j pi / l)^2,
// and on rectangles the tensor products of the per-axis functions. Fields are
// stored as coefficient vectors aligned with the eigenvalue-sorted mode table,
// so the mass matrix is the identity and A = -Laplacian acts diagonally.
//
// Physical-space evaluation uses a uniform midpoint grid. For the midpoint
// rule the discrete sine orthogonality is exact for all modes below the grid
// count, which makes fromPhysical an exact inverse of toPhysical on resolved
// modes (up to rounding).

#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace ncdde {

// Rectangular domain (0,l1) x ... with per-axis truncation and quadrature.
struct DomainSpec {
    int dims = 1;
    std::vector<double> lengths{};          // positive, one per axis
    std::vector<int> modes{};               // >= 1, one per axis
    std::vector<int> quadraturePoints{};    // >= 2*modes per axis

    static DomainSpec interval(double length, int modes, int quadPoints = 0);
    static DomainSpec rectangle(double lx, double ly, int modesX, int modesY,
                                int quadX = 0, int quadY = 0);

    int totalModes() const;
    int totalQuadraturePoints() const;
    void validate() const;  // throws ConfigError on violated invariants
};

struct Mode {
    std::array<int, 2> index{1, 0};  // 1-based per axis; index[1]==0 in 1D
    double eigenvalue = 0.0;
    double normalization = 0.0;      // L2-orthonormal scaling constant
};

// Eigenvalue table sorted ascending (lexicographic index tie-break).
struct BasisTable {
    std::vector<Mode> modes;
    double lambda1() const { return modes.front().eigenvalue; }
    std::size_t size() const { return modes.size(); }
};

BasisTable buildBasis(const DomainSpec& domain);

// Coefficient vector aligned with a BasisTable.
struct SpectralField {
    std::vector<double> coeffs;

    SpectralField() = default;
    explicit SpectralField(std::size_t n) : coeffs(n, 0.0) {}

    static SpectralField zeros(std::size_t n) { return SpectralField(n); }
    static SpectralField unitMode(std::size_t n, std::size_t mode);  // 0-based slot

    std::size_t size() const { return coeffs.size(); }
    double& operator[](std::size_t i) { return coeffs[i]; }
    double operator[](std::size_t i) const { return coeffs[i]; }
    bool allFinite() const;
};

// In-place linear algebra on aligned fields (ShapeError on size mismatch).
void axpy(double a, const SpectralField& x, SpectralField& y);  // y += a*x
SpectralField add(const SpectralField& a, const SpectralField& b);
SpectralField subtract(const SpectralField& a, const SpectralField& b);
SpectralField scale(const SpectralField& a, double s);

// L2 inner product; the basis is orthonormal so this is a plain dot product.
double innerProduct(const SpectralField& f, const SpectralField& g);

// Spectral Sobolev norm (sum lambda_j^s y_j^2)^(1/2); s >= 0.
double normSobolev(const SpectralField& f, const BasisTable& basis, double s);

// Componentwise multiplication by lambda_j^power (A = -Laplacian, diagonal).
SpectralField applyA(const SpectralField& f, const BasisTable& basis, double power = 1.0);

// Precomputed midpoint-grid evaluation matrices for one domain.
class SineTransform {
  public:
    explicit SineTransform(const DomainSpec& domain);

    const DomainSpec& domain() const { return domain_; }
    const BasisTable& basis() const { return basis_; }

    // Samples of sum_j y_j e_j on the quadrature grid (row-major in 2D).
    std::vector<double> toPhysical(const SpectralField& f) const;

    // L2 projection by discrete sine quadrature; inverse of toPhysical on
    // resolved modes.
    SpectralField fromPhysical(const std::vector<double>& samples) const;

    // Midpoint-rule approximations used by the test oracles.
    double quadratureIntegral(const std::vector<double>& samples) const;
    double quadratureL2(const std::vector<double>& samples) const;

    const std::vector<double>& gridAxis(int axis) const { return grid_[axis]; }
    double cellWeight() const { return weight_; }

  private:
    DomainSpec domain_;
    BasisTable basis_;
    // per-axis evaluation matrices, eval_[axis][m * modes + j] = e_{j+1}(x_m)
    std::array<std::vector<double>, 2> eval_;
    std::array<std::vector<double>, 2> grid_;
    // flat tensor slot of each sorted mode (identity in 1D)
    std::vector<int> sortedToTensor_;
    double weight_ = 0.0;  // quadrature cell weight (product over axes)
};

// One-shot convenience wrappers matching the in-memory API; they construct a
// transform per call, so hot paths should hold a SineTransform instead.
std::vector<double> toPhysical(const SpectralField& f, const DomainSpec& domain);
SpectralField fromPhysical(const std::vector<double>& samples, const DomainSpec& domain);

}  // namespace ncdde
