#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "cdq/model.hpp"

using namespace cdq;

TEST_CASE("two-level instance") {
    auto inst = build_two_level();
    CHECK(inst.n_qubits == 2);
    // comm = [H_T, H_S] = -i (Y0 Z1 + Z0 Y1)
    PauliSum expect = multiply(pauli_y(2, 0), pauli_z(2, 1)) +
                      multiply(pauli_z(2, 0), pauli_y(2, 1));
    expect *= cplx(0, -1);
    CHECK((inst.comm - expect).empty());

    // maximal eigenstate of H_S is |++> with eigenvalue 2
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_matrix(inst.h_simple));
    CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(2.0));
    Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(4, 0.5);
    CHECK((to_matrix(inst.h_simple) * plus - 2.0 * plus).norm() < 1e-12);

    // spectrum of H_T is {-1/2, -1/2, +1/2, +1/2}; obj_max of -ZZ/2 is 1/2
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> et(to_matrix(inst.h_target));
    CHECK(et.eigenvalues()(0) == doctest::Approx(-0.5));
    CHECK(et.eigenvalues()(1) == doctest::Approx(-0.5));
    CHECK(et.eigenvalues()(2) == doctest::Approx(0.5));
    CHECK(et.eigenvalues()(3) == doctest::Approx(0.5));
    CHECK(inst.obj_max == doctest::Approx(1.0));   // shifted objective
}

TEST_CASE("ising ring instance") {
    auto inst = build_ising_ring(4);
    CHECK(inst.comm.size() == 8);   // 8 two-local YZ strings
    Eigen::MatrixXcd mt = to_matrix(inst.h_target), ms = to_matrix(inst.h_simple);
    Eigen::MatrixXcd dense = mt * ms - ms * mt;
    CHECK((to_matrix(inst.comm) - dense).norm() < 1e-12);
    CHECK(inst.obj_max == doctest::Approx(4.0));

    // |+>^N cuts half the edges
    Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(16, 0.25);
    Eigen::MatrixXcd obj = to_matrix(inst.objective);
    double c = (plus.adjoint() * obj * plus)(0).real();
    CHECK(c == doctest::Approx(2.0));

    CHECK_THROWS_AS((void)build_ising_ring(5), validation_error);
    CHECK_THROWS_AS((void)build_ising_ring(2), validation_error);
}

TEST_CASE("maxcut instances") {
    auto single = build_maxcut({{0, 1}});
    CHECK(single.obj_max == doctest::Approx(1.0));
    PauliSum expect = multiply(pauli_y(2, 0), pauli_z(2, 1)) +
                      multiply(pauli_z(2, 0), pauli_y(2, 1));
    expect *= cplx(0, -1);
    CHECK((single.comm - expect).empty());

    auto tri = build_maxcut({{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.obj_max == doctest::Approx(2.0));
    CHECK(tri.has_triangle());
    CHECK(tri.degree() == 2);

    CHECK_THROWS_AS((void)build_maxcut({{0, 1}, {0, 1}}), validation_error);
    CHECK_THROWS_AS((void)build_maxcut({{0, 0}}), validation_error);
    CHECK_THROWS_AS((void)build_maxcut({{0, 1}, {2, 3}}), validation_error);
}

TEST_CASE("brute-force maxcut on a known graph") {
    // Petersen graph: maxcut = 12
    std::vector<Edge> petersen = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                  {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
    CHECK(max_cut_brute_force(10, petersen) == 12);
}

TEST_CASE("cd_hamiltonian endpoints and hermiticity") {
    auto inst = build_two_level();
    PauliSum h0 = cd_hamiltonian(inst, 0.0, 0.0, 0.0, -0.1);
    CHECK((h0 - inst.h_simple).empty());
    PauliSum h1 = cd_hamiltonian(inst, 1.0, 0.0, 0.0, -0.1);
    CHECK((h1 - inst.h_target).empty());

    PauliSum h = cd_hamiltonian(inst, 0.5, 1.0, 0.02, -4.0 / 17.0);
    CHECK(h.is_hermitian());
    // i(s + ldot alpha)[H_T,H_S] = (s + ldot alpha)(YZ + ZY)
    PauliTerm yz = PauliTerm::from_string("YZ");
    CHECK(h.coeff(yz).real() == doctest::Approx(0.02 - 4.0 / 17.0).epsilon(1e-12));

    CHECK_THROWS_AS((void)cd_hamiltonian(inst, std::nan(""), 0.0, 0.0, 0.0),
                    validation_error);

    // matches the adiabatic-only interpolation at s=0, ldot=0
    auto ring = build_ising_ring(6);
    PauliSum ha = cd_hamiltonian(ring, 0.3, 0.0, 0.0, -0.2);
    PauliSum expect2 = cplx(0.3) * ring.h_target + cplx(0.7) * ring.h_simple;
    PauliSum diff = ha - expect2;
    diff.prune(1e-13);
    CHECK(diff.empty());
}

TEST_CASE("two-level matching frame is the unit-normalized sector pair") {
    auto inst = build_two_level();
    CHECK(inst.match_n_qubits == 1);
    CHECK((inst.match_h_target - pauli_z(1, 0)).empty());
    CHECK((inst.match_h_simple - pauli_x(1, 0)).empty());
    CHECK((inst.qaoa_gamma_gen - cplx(-1.0) * pauli_zz(2, 0, 1)).empty());
}
