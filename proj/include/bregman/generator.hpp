#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace bregman {

// The four generators with closed-form gradients and conjugates.
enum class GeneratorKind {
    SqEuclideanHalf,   // F(x) = |x|^2 / 2 on R^n
    ShannonNegEntropy, // F(x) = sum x_i ln x_i - x_i on the positive orthant
    BurgEntropy,       // F(x) = sum 1 - ln|x_i| on a (positive or negative) orthant
    Exponential,       // F(x) = sum e^{x_i} on R^n
};

enum class DomainConstraint { All, PositiveOrthant, NegativeOrthant };

struct DomainDescriptor {
    DomainConstraint constraint = DomainConstraint::All;
    // Coordinates closer than this to an orthant boundary are rejected;
    // keeps |grad F| finite on accepted points.
    double margin = 1e-12;

    bool contains(const Eigen::VectorXd& x) const;
};

// A function of Legendre type: strictly convex, differentiable on an open
// convex domain, with |grad F| unbounded toward the domain boundary.
class Generator {
public:
    static Generator sq_euclidean_half(int dim);
    static Generator shannon_neg_entropy(int dim);
    static Generator burg_entropy(int dim);
    static Generator exponential(int dim);

    GeneratorKind kind() const { return kind_; }
    int dimension() const { return dim_; }
    const DomainDescriptor& domain() const { return domain_; }
    std::string name() const;

    /// F(x); throws DomainViolation outside the open domain.
    double value(const Eigen::VectorXd& x) const;

    /// grad F(x), componentwise closed form.
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;

    /// Diagonal of the Hessian of F at x (all four kinds are separable).
    Eigen::VectorXd hessian_diagonal(const Eigen::VectorXd& x) const;

    /// D_F(x, y) = F(x) - F(y) - <grad F(y), x - y>; nonnegative, zero iff x = y.
    double divergence(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    /// The conjugate image x* = grad F(x); grad F*(x*) = x round-trips.
    Eigen::VectorXd conjugate_point(const Eigen::VectorXd& x) const;

    /// The conjugate generator F* on the conjugate domain. Shannon pairs with
    /// Exponential; Burg pairs with Burg on the opposite orthant; half the
    /// squared norm is self-conjugate.
    Generator conjugate() const;

private:
    Generator(GeneratorKind k, int dim, DomainDescriptor d);
    void require_in_domain(const Eigen::VectorXd& x, const char* role) const;

    GeneratorKind kind_;
    int dim_;
    DomainDescriptor domain_;
};

// Center plus radius in divergence units; contains x iff D_F(x, center) <= radius.
struct DualBall {
    Eigen::VectorXd center;
    double radius = 0.0;
};

// Finite indexed point set validated against a generator's domain.
class PointCloud {
public:
    PointCloud(const Generator& gen, std::vector<Eigen::VectorXd> points);

    int size() const { return static_cast<int>(points_.size()); }
    int dimension() const { return dim_; }
    const Eigen::VectorXd& operator[](int i) const { return points_[i]; }
    const std::vector<Eigen::VectorXd>& points() const { return points_; }

private:
    std::vector<Eigen::VectorXd> points_;
    int dim_ = 0;
};

} // namespace bregman
