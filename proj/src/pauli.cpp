#include "cdq/pauli.hpp"

#include <bit>
#include <cmath>

namespace cdq {

namespace {

inline int popcount(std::uint64_t v) { return std::popcount(v); }

inline cplx ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

inline std::uint64_t maskbits(int n) {
    return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

}  // namespace

std::string PauliTerm::to_string() const {
    std::string s(static_cast<std::size_t>(n_qubits), 'I');
    for (int q = 0; q < n_qubits; ++q) {
        bool xb = (x >> q) & 1, zb = (z >> q) & 1;
        s[static_cast<std::size_t>(q)] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
}

PauliTerm PauliTerm::from_string(const std::string& s) {
    PauliTerm t;
    t.n_qubits = static_cast<int>(s.size());
    if (t.n_qubits < 1 || t.n_qubits > 64)
        throw validation_error("PauliTerm: string length out of range");
    for (int q = 0; q < t.n_qubits; ++q) {
        switch (s[static_cast<std::size_t>(q)]) {
            case 'I': break;
            case 'X': t.x |= 1ull << q; break;
            case 'Y': t.x |= 1ull << q; t.z |= 1ull << q; break;
            case 'Z': t.z |= 1ull << q; break;
            default: throw validation_error("PauliTerm: bad character in string");
        }
    }
    return t;
}

std::pair<PauliTerm, cplx> multiply(const PauliTerm& a, const PauliTerm& b) {
    if (a.n_qubits != b.n_qubits)
        throw dimension_error("PauliTerm multiply: qubit count mismatch");
    PauliTerm out;
    out.n_qubits = a.n_qubits;
    out.x = a.x ^ b.x;
    out.z = a.z ^ b.z;
    int k = popcount(a.x & a.z) + popcount(b.x & b.z) - popcount(out.x & out.z);
    cplx phase = ipow(k);
    if (popcount(a.z & b.x) & 1) phase = -phase;
    return {out, phase};
}

cplx PauliSum::coeff(const PauliTerm& t) const {
    auto it = terms_.find({t.x, t.z});
    return it == terms_.end() ? cplx{0, 0} : it->second;
}

void PauliSum::add_term(const PauliTerm& t, cplx c) {
    if (t.n_qubits != n_)
        throw dimension_error("PauliSum: term qubit count mismatch");
    add_term(t.x, t.z, c);
}

void PauliSum::add_term(std::uint64_t x, std::uint64_t z, cplx c) {
    if ((x | z) & ~maskbits(n_))
        throw dimension_error("PauliSum: mask exceeds qubit count");
    auto [it, inserted] = terms_.try_emplace({x, z}, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) <= kPruneThreshold) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
    if (o.n_ != n_) throw dimension_error("PauliSum +=: qubit count mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
    if (o.n_ != n_) throw dimension_error("PauliSum -=: qubit count mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

PauliSum& PauliSum::operator*=(cplx c) {
    if (std::abs(c) <= kPruneThreshold) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    prune();
    return *this;
}

void PauliSum::prune(double threshold) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= threshold)
            it = terms_.erase(it);
        else
            ++it;
    }
}

PauliSum PauliSum::without_identity() const {
    PauliSum out = *this;
    out.terms_.erase({0, 0});
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto& [k, c] : terms_)
        if (std::abs(c.imag()) > tol) return false;
    return true;
}

bool PauliSum::is_antihermitian(double tol) const {
    for (const auto& [k, c] : terms_)
        if (std::abs(c.real()) > tol) return false;
    return true;
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
    if (a.n_qubits() != b.n_qubits())
        throw dimension_error("PauliSum multiply: qubit count mismatch");
    const int n = a.n_qubits();
    PauliSum out(n);
    for (const auto& [ka, ca] : a.terms()) {
        PauliTerm ta{n, ka.first, ka.second};
        for (const auto& [kb, cb] : b.terms()) {
            PauliTerm tb{n, kb.first, kb.second};
            auto [t, ph] = multiply(ta, tb);
            out.add_term(t.x, t.z, ca * cb * ph);
        }
    }
    return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
    if (a.n_qubits() != b.n_qubits())
        throw dimension_error("commutator: qubit count mismatch");
    const int n = a.n_qubits();
    PauliSum out(n);
    for (const auto& [ka, ca] : a.terms()) {
        PauliTerm ta{n, ka.first, ka.second};
        for (const auto& [kb, cb] : b.terms()) {
            PauliTerm tb{n, kb.first, kb.second};
            auto [t, ph_ab] = multiply(ta, tb);
            auto [t2, ph_ba] = multiply(tb, ta);
            (void)t2;  // same product term either way
            cplx d = ca * cb * (ph_ab - ph_ba);
            if (d != cplx{0, 0}) out.add_term(t.x, t.z, d);
        }
    }
    return out;
}

PauliSum i_commutator(const PauliSum& a, const PauliSum& b) {
    PauliSum c = commutator(a, b);
    c *= cplx{0, 1};
    return c;
}

PauliSum nested_commutator(const PauliSum& a, const PauliSum& b, int depth) {
    if (depth < 1) throw validation_error("nested_commutator: depth must be >= 1");
    PauliSum out = commutator(a, b);
    for (int d = 1; d < depth; ++d) out = commutator(a, out);
    return out;
}

cplx trace_product(const PauliSum& a, const PauliSum& b) {
    if (a.n_qubits() != b.n_qubits())
        throw dimension_error("trace_product: qubit count mismatch");
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    cplx s{0, 0};
    const bool a_smaller = ta.size() <= tb.size();
    const auto& small = a_smaller ? ta : tb;
    const auto& big = a_smaller ? tb : ta;
    for (const auto& [k, c] : small) {
        auto it = big.find(k);
        if (it == big.end()) continue;
        // each basis string squares to +I, so the pair contributes c_a * c_b
        s += c * it->second;
    }
    return s;
}

double norm_sq(const PauliSum& a) {
    if (!a.is_hermitian() && !a.is_antihermitian())
        throw numeric_error("norm_sq: operator is neither Hermitian nor anti-Hermitian");
    return trace_product(a, a).real();
}

double trace_norm(const PauliSum& a) { return std::sqrt(std::abs(norm_sq(a))); }

Eigen::MatrixXcd to_matrix(const PauliSum& a) {
    const int n = a.n_qubits();
    if (n > kDenseCap)
        throw resource_error("to_matrix: qubit count above dense cap");
    const std::size_t dim = 1ull << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(dim), static_cast<long>(dim));
    for (const auto& [k, c] : a.terms()) {
        auto [x, z] = k;
        cplx phase = ipow(popcount(x & z));
        // P(x,z)|b> = phase * (-1)^{popcount(z & b)} |b ^ x>
        for (std::size_t b = 0; b < dim; ++b) {
            double sign = (popcount(z & b) & 1) ? -1.0 : 1.0;
            m(static_cast<long>(b ^ x), static_cast<long>(b)) += c * phase * sign;
        }
    }
    return m;
}

PauliSum pauli_x(int n, int q) {
    PauliSum s(n);
    s.add_term(1ull << q, 0, 1.0);
    return s;
}

PauliSum pauli_y(int n, int q) {
    PauliSum s(n);
    s.add_term(1ull << q, 1ull << q, 1.0);
    return s;
}

PauliSum pauli_z(int n, int q) {
    PauliSum s(n);
    s.add_term(0, 1ull << q, 1.0);
    return s;
}

PauliSum pauli_zz(int n, int q1, int q2) {
    PauliSum s(n);
    s.add_term(0, (1ull << q1) | (1ull << q2), 1.0);
    return s;
}

PauliSum pauli_identity(int n) {
    PauliSum s(n);
    s.add_term(0, 0, 1.0);
    return s;
}

}  // namespace cdq
