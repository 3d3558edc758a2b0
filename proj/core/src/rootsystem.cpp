#include "flagbundle/rootsystem.hpp"

#include "flagbundle/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

namespace flagbundle {

namespace {

struct Edge {
    int long_node;
    int short_node;
    int ratio;  // 1, 2 or 3
};

std::vector<Edge> dynkin_edges(const LieType& t) {
    const int n = t.rank;
    std::vector<Edge> e;
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) e.push_back({i, i + 1, 1});
    };
    switch (t.family) {
    case Family::A:
        chain(0, n - 1);
        break;
    case Family::B:
        chain(0, n - 2);
        e.push_back({n - 2, n - 1, 2});
        break;
    case Family::C:
        chain(0, n - 2);
        e.push_back({n - 1, n - 2, 2});
        break;
    case Family::D:
        chain(0, n - 2);
        e.push_back({n - 3, n - 1, 1});
        break;
    case Family::E:
        // 1-3-4-5-6-7-8 with 2 hanging off 4.
        e.push_back({0, 2, 1});
        e.push_back({1, 3, 1});
        for (int i = 2; i < n - 1; ++i) e.push_back({i, i + 1, 1});
        break;
    case Family::F:
        e.push_back({0, 1, 1});
        e.push_back({1, 2, 2});
        e.push_back({2, 3, 1});
        break;
    case Family::G:
        e.push_back({1, 0, 3});
        break;
    }
    return e;
}

std::vector<RationalVector> rational_inverse(const CartanMatrix& a) {
    const int n = a.rank();
    std::vector<RationalVector> m(n, RationalVector(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw DomainError("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        const Rational p = m[col][col];
        for (auto& x : m[col]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<RationalVector> inv(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

std::vector<int> symmetrizer(const CartanMatrix& a) {
    const int n = a.rank();
    std::vector<Rational> eps(n, Rational(0));
    eps[0] = 1;
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        const int i = todo.front();
        todo.pop();
        for (int j = 0; j < n; ++j) {
            if (j == i || a(i, j) == 0 || eps[j] != 0) continue;
            eps[j] = eps[i] * Rational(a(i, j), a(j, i));
            todo.push(j);
        }
    }
    Rational shortest = *std::min_element(eps.begin(), eps.end());
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        const Rational r = eps[i] / shortest;
        out[i] = static_cast<int>(r.numerator());
    }
    return out;
}

std::vector<Root> generate_roots(const CartanMatrix& a) {
    const int n = a.rank();
    std::set<Root> found;
    std::vector<Root> level;
    for (int i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        level.push_back(r);
        found.insert(r);
    }
    while (!level.empty()) {
        std::set<Root> next;
        for (const Root& beta : level) {
            for (int i = 0; i < n; ++i) {
                // p: how far the alpha_i string extends downward from beta.
                int p = 0;
                Root down = beta;
                while (true) {
                    --down[i];
                    if (down[i] < 0 || !found.contains(down)) break;
                    ++p;
                }
                int pair = 0;
                for (int j = 0; j < n; ++j) pair += beta[j] * a(i, j);
                if (p - pair > 0) {
                    Root up = beta;
                    ++up[i];
                    if (!found.contains(up)) next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
        found.insert(next.begin(), next.end());
    }
    std::vector<Root> roots(found.begin(), found.end());
    std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
        const int hx = height(x), hy = height(y);
        return hx != hy ? hx < hy : x > y;
    });
    return roots;
}

}  // namespace

LieType LieType::parse(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) throw ParseError("empty Lie type", pos);
    LieType t;
    switch (std::toupper(static_cast<unsigned char>(text[pos]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw ParseError("unknown Lie family '" + std::string(1, text[pos]) + "'", pos);
    }
    ++pos;
    const std::size_t digits = pos;
    int rank = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        rank = rank * 10 + (text[pos] - '0');
        if (rank > 1000) throw ParseError("rank too large", digits);
        ++pos;
    }
    if (pos == digits) throw ParseError("expected rank after family letter", pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("unexpected trailing characters in Lie type", pos);
    t.rank = rank;
    validate(t);
    return t;
}

char LieType::letter() const { return "ABCDEFG"[static_cast<int>(family)]; }

std::string LieType::name() const { return std::string(1, letter()) + std::to_string(rank); }

void validate(const LieType& t) {
    const int n = t.rank;
    bool ok = false;
    switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    }
    if (!ok) throw DomainError("invalid rank " + std::to_string(n) + " for family " + t.letter());
}

bool Weight::is_integral_dominant() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Rational& q) { return is_integer(q) && q >= 0; });
}

CartanMatrix cartan_matrix(const LieType& t) {
    validate(t);
    const int n = t.rank;
    CartanMatrix a;
    a.entries.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a.entries[i][i] = 2;
    for (const Edge& e : dynkin_edges(t)) {
        a.entries[e.short_node][e.long_node] = -e.ratio;
        a.entries[e.long_node][e.short_node] = -1;
    }
    return a;
}

RootSystem::RootSystem(const LieType& t)
    : type_(t), cartan_(cartan_matrix(t)) {
    roots_ = generate_roots(cartan_);
    lengths_sq_ = symmetrizer(cartan_);
    inverse_ = rational_inverse(cartan_);
}

Root RootSystem::simple_root(int i) const {
    if (i < 0 || i >= rank()) throw DomainError("simple root index out of range");
    Root r(rank(), 0);
    r[i] = 1;
    return r;
}

bool RootSystem::is_positive_root(const Root& r) const {
    return std::binary_search(roots_.begin(), roots_.end(), r, [](const Root& x, const Root& y) {
        const int hx = height(x), hy = height(y);
        return hx != hy ? hx < hy : x > y;
    });
}

Rational RootSystem::pairing(const Root& r, int i) const {
    if (i < 0 || i >= rank()) throw DomainError("simple root index out of range");
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += r[j] * cartan_(i, j);
    return Rational(s);
}

Rational RootSystem::pairing(const Weight& w, int i) const {
    if (i < 0 || i >= rank()) throw DomainError("simple root index out of range");
    return w.coeffs.at(i);
}

Rational RootSystem::pairing(const RationalVector& x, int i) const {
    if (i < 0 || i >= rank()) throw DomainError("simple root index out of range");
    Rational s = 0;
    for (int j = 0; j < rank(); ++j) s += x[j] * cartan_(i, j);
    return s;
}

Weight RootSystem::root_to_weight_basis(const Root& r) const {
    Weight w;
    for (int i = 0; i < rank(); ++i) w.coeffs.push_back(pairing(r, i));
    return w;
}

Weight RootSystem::root_to_weight_basis(const RationalVector& x) const {
    Weight w;
    for (int i = 0; i < rank(); ++i) w.coeffs.push_back(pairing(x, i));
    return w;
}

RationalVector RootSystem::weight_to_root_basis(const Weight& w) const {
    // c = A x  =>  x = A^{-1} c.
    RationalVector x(rank(), Rational(0));
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i < rank(); ++i) x[j] += inverse_[j][i] * w.coeffs[i];
    return x;
}

Rational RootSystem::inner_product(const RationalVector& x, const RationalVector& y) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            s += x[i] * y[j] * Rational(cartan_(i, j) * lengths_sq_[i], 2);
    return s;
}

Rational RootSystem::coroot_pairing(const Weight& w, const Root& beta) const {
    RationalVector b(beta.begin(), beta.end());
    Rational wb = 0;  // (w, beta) with (omega_i, alpha_j) = delta_ij eps_j / 2
    for (int i = 0; i < rank(); ++i) wb += w.coeffs[i] * beta[i] * Rational(lengths_sq_[i], 2);
    return 2 * wb / inner_product(b, b);
}

RootSystem positive_roots(const LieType& t) { return RootSystem(t); }

Rational pairing(const Root& r, int i, const RootSystem& rs) { return rs.pairing(r, i); }

Rational pairing(const Weight& w, int i, const RootSystem& rs) { return rs.pairing(w, i); }

Weight root_to_weight_basis(const Root& r, const RootSystem& rs) { return rs.root_to_weight_basis(r); }

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

Weight fundamental_weight(int rank, int i) {
    if (i < 0 || i >= rank) throw DomainError("fundamental weight index out of range");
    Weight w{RationalVector(rank, Rational(0))};
    w.coeffs[i] = 1;
    return w;
}

int expected_positive_root_count(const LieType& t) {
    const int n = t.rank;
    switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

}  // namespace flagbundle
