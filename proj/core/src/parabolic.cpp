#include "flagbundle/parabolic.hpp"

#include "flagbundle/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace flagbundle {

ParabolicDatum::ParabolicDatum(RootSystem rs, std::vector<int> theta)
    : rs_(std::move(rs)), theta_(std::move(theta)) {
    std::sort(theta_.begin(), theta_.end());
    theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
    for (int i : theta_)
        if (i < 0 || i >= rs_.rank())
            throw DomainError("Theta index " + std::to_string(i + 1) + " out of range for " +
                              rs_.type().name());
    if (static_cast<int>(theta_.size()) == rs_.rank())
        throw DomainError("Theta = Sigma describes a point, not a flag manifold");
    for (int i = 0; i < rs_.rank(); ++i)
        if (!in_theta(i)) complement_.push_back(i);
}

bool ParabolicDatum::in_theta(int i) const {
    return std::binary_search(theta_.begin(), theta_.end(), i);
}

ParabolicDatum ParabolicDatum::parse(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) throw ParseError("expected '/' after Lie type", text.size());
    const LieType t = LieType::parse(text.substr(0, slash));

    std::size_t pos = slash + 1;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{'", pos);
    ++pos;
    std::vector<int> theta;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            const std::size_t start = pos;
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v > 1000) throw ParseError("index too large", start);
                ++pos;
            }
            if (pos == start) throw ParseError("expected a simple-root index", pos);
            if (v < 1 || v > t.rank)
                throw ParseError("simple-root index " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(t.rank),
                                 start);
            theta.push_back(v - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or '}'", pos);
        }
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected trailing characters in datum", pos);
    return ParabolicDatum(t, std::move(theta));
}

std::string ParabolicDatum::to_string() const {
    std::string s = type().name() + "/{";
    for (std::size_t k = 0; k < theta_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(theta_[k] + 1);
    }
    return s + "}";
}

std::vector<Root> complement_roots(const ParabolicDatum& p) {
    std::vector<Root> out;
    for (const Root& r : p.root_system().positive_roots()) {
        for (int i : p.complement()) {
            if (r[i] != 0) {
                out.push_back(r);
                break;
            }
        }
    }
    return out;
}

DeltaP delta_p(const ParabolicDatum& p) {
    DeltaP d;
    d.root.assign(p.rank(), 0);
    for (const Root& r : complement_roots(p))
        for (int i = 0; i < p.rank(); ++i) d.root[i] += r[i];
    d.weight = p.root_system().root_to_weight_basis(d.root);
    return d;
}

long fano_index(const ParabolicDatum& p) {
    const Weight w = delta_p(p).weight;
    long g = 0;
    for (int i : p.complement()) {
        const Rational& c = w.coeffs[i];
        if (!is_integer(c)) throw DomainError("non-integral delta_P pairing");
        g = std::gcd(g, static_cast<long>(c.numerator()));
    }
    return g;
}

bool is_minuscule(const ParabolicDatum& p, int alpha) {
    if (alpha < 0 || alpha >= p.rank()) throw DomainError("simple root index out of range");
    const RootSystem& rs = p.root_system();
    const Weight w = fundamental_weight(rs.rank(), alpha);
    for (const Root& beta : rs.positive_roots()) {
        const Rational c = rs.coroot_pairing(w, beta);
        if (c != 0 && c != 1) return false;
    }
    return true;
}

FlagInvariants flag_invariants(const ParabolicDatum& p) {
    FlagInvariants f;
    f.complement_pos_roots = complement_roots(p);
    f.m_theta = static_cast<int>(f.complement_pos_roots.size());
    const DeltaP d = delta_p(p);
    f.delta_p_root = d.root;
    f.delta_p_weight = d.weight;
    f.fano_index = fano_index(p);
    f.picard_rank = static_cast<int>(p.complement().size());
    for (int i = 0; i < p.rank(); ++i) f.minuscule_flags.push_back(is_minuscule(p, i));
    return f;
}

ParabolicDatum projective_space(int n) {
    std::vector<int> theta;
    for (int i = 1; i < n; ++i) theta.push_back(i);
    return ParabolicDatum(LieType{Family::A, n}, theta);
}

ParabolicDatum grassmannian(int k, int n) {
    if (k < 1 || k >= n) throw DomainError("Gr(k, n) needs 1 <= k < n");
    std::vector<int> theta;
    for (int i = 0; i < n - 1; ++i)
        if (i != k - 1) theta.push_back(i);
    return ParabolicDatum(LieType{Family::A, n - 1}, theta);
}

ParabolicDatum full_flag(const LieType& t) { return ParabolicDatum(t, {}); }

}  // namespace flagbundle
