#include "flagbundle/bundles.hpp"

#include "flagbundle/errors.hpp"

#include <algorithm>

namespace flagbundle {

BundleVector::BundleVector(ParabolicDatum base, std::vector<long> ell)
    : base_(std::move(base)), ell_(std::move(ell)) {
    if (ell_.size() != base_.complement().size())
        throw DomainError("bundle vector over " + base_.to_string() + " needs " +
                          std::to_string(base_.complement().size()) + " entries, got " +
                          std::to_string(ell_.size()));
}

BundleVector BundleVector::trivial(const ParabolicDatum& base) {
    return BundleVector(base, std::vector<long>(base.complement().size(), 0));
}

bool BundleVector::is_trivial() const {
    return std::all_of(ell_.begin(), ell_.end(), [](long v) { return v == 0; });
}

Weight BundleVector::euler_weight() const {
    Weight w{RationalVector(base_.rank(), Rational(0))};
    for (std::size_t k = 0; k < ell_.size(); ++k) w.coeffs[base_.complement()[k]] = ell_[k];
    return w;
}

BundleVector BundleVector::operator-() const {
    std::vector<long> e = ell_;
    for (long& v : e) v = -v;
    return BundleVector(base_, std::move(e));
}

BundleVector operator+(const BundleVector& x, const BundleVector& y) {
    if (!(x.base_ == y.base_))
        throw DomainError("cannot add bundles over " + x.base_.to_string() + " and " +
                          y.base_.to_string());
    std::vector<long> e = x.ell_;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += y.ell_[k];
    return BundleVector(x.base_, std::move(e));
}

BundleVector operator*(long k, const BundleVector& x) {
    std::vector<long> e = x.ell_;
    for (long& v : e) v *= k;
    return BundleVector(x.base_, std::move(e));
}

BundleVector bundle_sum(const BundleVector& q1, const BundleVector& q2) { return q1 + q2; }

BundleVector canonical_fraction_bundle(const ParabolicDatum& p, long ell) {
    if (ell <= 0) throw DomainError("canonical fraction needs ell > 0");
    const Weight w = delta_p(p).weight;
    const long index = fano_index(p);
    std::vector<long> e;
    for (int i : p.complement()) {
        const Rational v = -Rational(ell) * w.coeffs[i] / Rational(index);
        if (!is_integer(v)) throw DomainError("Fano index does not divide delta_P pairing");
        e.push_back(static_cast<long>(v.numerator()));
    }
    return BundleVector(p, std::move(e));
}

SasakiDatum::SasakiDatum(ParabolicDatum base, std::vector<long> positive_ell)
    : positive_(std::move(base), std::move(positive_ell)) {
    for (long v : positive_.ell())
        if (v <= 0) throw DomainError("Sasaki datum needs every ell_alpha > 0");
    lambda_ = positive_.euler_weight();
}

Weight sasaki_weight(const SasakiDatum& s) { return s.lambda_weight(); }

std::vector<double> ConnectionDescriptor::norm_sq_exponents(int rank) const {
    std::vector<double> e(rank, 0.0);
    for (const ConnectionTerm& t : terms) e.at(t.simple_index) = 0.5 * static_cast<double>(t.norm_exponent);
    return e;
}

ConnectionDescriptor connection_descriptor(const BundleVector& q) {
    ConnectionDescriptor d;
    for (std::size_t k = 0; k < q.ell().size(); ++k)
        if (q.ell()[k] != 0) d.terms.push_back({q.base().complement()[k], 2 * q.ell()[k]});
    return d;
}

}  // namespace flagbundle
