#include "bregman/generator.hpp"

#include <cmath>
#include <sstream>

#include "bregman/errors.hpp"

namespace bregman {

bool DomainDescriptor::contains(const Eigen::VectorXd& x) const {
    for (int i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i])) return false;
        switch (constraint) {
        case DomainConstraint::All: break;
        case DomainConstraint::PositiveOrthant:
            if (!(x[i] > margin)) return false;
            break;
        case DomainConstraint::NegativeOrthant:
            if (!(x[i] < -margin)) return false;
            break;
        }
    }
    return true;
}

namespace {

DomainDescriptor domain_for(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::SqEuclideanHalf:
    case GeneratorKind::Exponential: return {DomainConstraint::All};
    case GeneratorKind::ShannonNegEntropy:
    case GeneratorKind::BurgEntropy: return {DomainConstraint::PositiveOrthant};
    }
    return {};
}

} // namespace

Generator::Generator(GeneratorKind k, int dim, DomainDescriptor d)
    : kind_(k), dim_(dim), domain_(d) {}

Generator Generator::sq_euclidean_half(int dim) {
    return {GeneratorKind::SqEuclideanHalf, dim, domain_for(GeneratorKind::SqEuclideanHalf)};
}

Generator Generator::shannon_neg_entropy(int dim) {
    return {GeneratorKind::ShannonNegEntropy, dim, domain_for(GeneratorKind::ShannonNegEntropy)};
}

Generator Generator::burg_entropy(int dim) {
    return {GeneratorKind::BurgEntropy, dim, domain_for(GeneratorKind::BurgEntropy)};
}

Generator Generator::exponential(int dim) {
    return {GeneratorKind::Exponential, dim, domain_for(GeneratorKind::Exponential)};
}

std::string Generator::name() const {
    switch (kind_) {
    case GeneratorKind::SqEuclideanHalf: return "sq_euclidean_half";
    case GeneratorKind::ShannonNegEntropy: return "shannon_neg_entropy";
    case GeneratorKind::BurgEntropy:
        return domain_.constraint == DomainConstraint::NegativeOrthant
                   ? "burg_entropy_conjugate"
                   : "burg_entropy";
    case GeneratorKind::Exponential: return "exponential";
    }
    return "unknown";
}

void Generator::require_in_domain(const Eigen::VectorXd& x, const char* role) const {
    if (x.size() != dim_) {
        std::ostringstream os;
        os << role << " has dimension " << x.size() << ", generator expects " << dim_;
        throw DomainViolation(os.str());
    }
    if (!domain_.contains(x)) {
        for (int i = 0; i < x.size(); ++i) {
            bool bad = !std::isfinite(x[i]);
            if (domain_.constraint == DomainConstraint::PositiveOrthant)
                bad = bad || !(x[i] > domain_.margin);
            if (domain_.constraint == DomainConstraint::NegativeOrthant)
                bad = bad || !(x[i] < -domain_.margin);
            if (bad) {
                std::ostringstream os;
                os << role << " outside open domain of " << name() << ": coordinate " << i
                   << " = " << x[i];
                throw DomainViolation(os.str());
            }
        }
    }
}

double Generator::value(const Eigen::VectorXd& x) const {
    require_in_domain(x, "point");
    switch (kind_) {
    case GeneratorKind::SqEuclideanHalf: return 0.5 * x.squaredNorm();
    case GeneratorKind::ShannonNegEntropy: {
        double s = 0.0;
        for (int i = 0; i < x.size(); ++i) s += x[i] * std::log(x[i]) - x[i];
        return s;
    }
    case GeneratorKind::BurgEntropy: {
        double s = 0.0;
        for (int i = 0; i < x.size(); ++i) s += 1.0 - std::log(std::abs(x[i]));
        return s;
    }
    case GeneratorKind::Exponential: {
        double s = 0.0;
        for (int i = 0; i < x.size(); ++i) s += std::exp(x[i]);
        return s;
    }
    }
    return 0.0;
}

Eigen::VectorXd Generator::gradient(const Eigen::VectorXd& x) const {
    require_in_domain(x, "point");
    switch (kind_) {
    case GeneratorKind::SqEuclideanHalf: return x;
    case GeneratorKind::ShannonNegEntropy: return x.array().log();
    case GeneratorKind::BurgEntropy: return -x.cwiseInverse();
    case GeneratorKind::Exponential: return x.array().exp();
    }
    return x;
}

Eigen::VectorXd Generator::hessian_diagonal(const Eigen::VectorXd& x) const {
    require_in_domain(x, "point");
    switch (kind_) {
    case GeneratorKind::SqEuclideanHalf: return Eigen::VectorXd::Ones(x.size());
    case GeneratorKind::ShannonNegEntropy: return x.cwiseInverse();
    case GeneratorKind::BurgEntropy: return x.array().square().inverse();
    case GeneratorKind::Exponential: return x.array().exp();
    }
    return x;
}

double Generator::divergence(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return value(x) - value(y) - gradient(y).dot(x - y);
}

Eigen::VectorXd Generator::conjugate_point(const Eigen::VectorXd& x) const {
    return gradient(x);
}

Generator Generator::conjugate() const {
    switch (kind_) {
    case GeneratorKind::SqEuclideanHalf: return *this;
    case GeneratorKind::ShannonNegEntropy: return exponential(dim_);
    case GeneratorKind::Exponential: return shannon_neg_entropy(dim_);
    case GeneratorKind::BurgEntropy: {
        DomainDescriptor d = domain_;
        d.constraint = domain_.constraint == DomainConstraint::PositiveOrthant
                           ? DomainConstraint::NegativeOrthant
                           : DomainConstraint::PositiveOrthant;
        return {GeneratorKind::BurgEntropy, dim_, d};
    }
    }
    return *this;
}

PointCloud::PointCloud(const Generator& gen, std::vector<Eigen::VectorXd> points)
    : points_(std::move(points)), dim_(gen.dimension()) {
    for (size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != dim_) {
            std::ostringstream os;
            os << "point " << i << " has dimension " << points_[i].size() << ", expected "
               << dim_;
            throw DomainViolation(os.str());
        }
        if (!gen.domain().contains(points_[i])) {
            std::ostringstream os;
            os << "point " << i << " outside open domain of " << gen.name();
            throw DomainViolation(os.str());
        }
    }
}

} // namespace bregman
