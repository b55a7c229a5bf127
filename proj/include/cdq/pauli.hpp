#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cdq/errors.hpp"

namespace cdq {

using cplx = std::complex<double>;

// Coefficients below this magnitude are dropped after every arithmetic pass.
inline constexpr double kPruneThreshold = 1e-14;

// Dense export refuses above this many qubits (2^12 x 2^12 doubles).
inline constexpr int kDenseCap = 12;

// A single Pauli string on n qubits, stored as X/Z bit masks.
//
// The term with masks (x, z) stands for the Hermitian operator
//   P(x,z) = i^{popcount(x & z)} * prod_q X_q^{x_q} Z_q^{z_q},
// so a qubit appearing in both masks carries Y literally (phase convention
// Z*X = iY). Products of two terms give one term times a scalar in
// {1, i, -1, -i}.
struct PauliTerm {
    int n_qubits = 0;
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    bool identity() const { return x == 0 && z == 0; }
    bool operator==(const PauliTerm&) const = default;
    // "IXYZ..." with qubit 0 printed first
    std::string to_string() const;
    static PauliTerm from_string(const std::string& s);
};

// Product of two terms: unique product term plus its scalar phase.
std::pair<PauliTerm, cplx> multiply(const PauliTerm& a, const PauliTerm& b);

// Sparse complex combination of Pauli strings on a fixed qubit count.
class PauliSum {
  public:
    using Key = std::pair<std::uint64_t, std::uint64_t>;  // (x, z)
    using Map = std::map<Key, cplx>;

    PauliSum() = default;
    explicit PauliSum(int n_qubits) : n_(n_qubits) {
        if (n_qubits < 1 || n_qubits > 64)
            throw validation_error("PauliSum: qubit count out of range");
    }

    int n_qubits() const { return n_; }
    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    cplx coeff(const PauliTerm& t) const;
    void add_term(const PauliTerm& t, cplx c);
    void add_term(std::uint64_t x, std::uint64_t z, cplx c);

    PauliSum& operator+=(const PauliSum& o);
    PauliSum& operator-=(const PauliSum& o);
    PauliSum& operator*=(cplx c);
    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
    friend PauliSum operator*(cplx c, PauliSum a) { return a *= c; }

    void prune(double threshold = kPruneThreshold);
    PauliSum without_identity() const;

    // All coefficients real (Hermitian basis) within tolerance.
    bool is_hermitian(double tol = 1e-12) const;
    // All coefficients purely imaginary within tolerance.
    bool is_antihermitian(double tol = 1e-12) const;

  private:
    int n_ = 0;
    Map terms_;
};

PauliSum multiply(const PauliSum& a, const PauliSum& b);
PauliSum commutator(const PauliSum& a, const PauliSum& b);
// i[a,b]; Hermitian whenever a, b are.
PauliSum i_commutator(const PauliSum& a, const PauliSum& b);
// Left-nested [a,[a,...,[a,b]...]] with `depth` copies of a.
PauliSum nested_commutator(const PauliSum& a, const PauliSum& b, int depth);

// Normalized trace tr(a b)/2^n. Only term pairs multiplying to identity
// contribute.
cplx trace_product(const PauliSum& a, const PauliSum& b);

// tr(a^2)/2^n as a signed real: >= 0 for Hermitian a, <= 0 for
// anti-Hermitian a. Throws on mixed Hermiticity.
double norm_sq(const PauliSum& a);

// sqrt(|norm_sq|)
double trace_norm(const PauliSum& a);

// Dense matrix in the computational basis (qubit 0 = least significant bit).
Eigen::MatrixXcd to_matrix(const PauliSum& a);

// Single-site constructors
PauliSum pauli_x(int n, int q);
PauliSum pauli_y(int n, int q);
PauliSum pauli_z(int n, int q);
PauliSum pauli_zz(int n, int q1, int q2);
PauliSum pauli_identity(int n);

}  // namespace cdq
