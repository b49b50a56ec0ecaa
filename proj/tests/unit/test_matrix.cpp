#include <cmath>

#include "doctest.h"
#include "lhm/density_matrix.hpp"
#include "lhm/errors.hpp"
#include "lhm/matrix4.hpp"

using namespace lhm;

TEST_CASE("matrix4 arithmetic") {
  Matrix4 a = Matrix4::identity();
  a(0, 1) = cplx(1.0, 2.0);
  CHECK(a.trace() == cplx(4.0));
  CHECK(a.adjoint()(1, 0) == cplx(1.0, -2.0));
  CHECK(a.hermiticity_error() == doctest::Approx(std::abs(cplx(1.0, 2.0))));
  const Matrix4 b = a * a;
  CHECK(b(0, 1) == cplx(2.0, 4.0));
  CHECK(max_abs_diff(a + a, a * cplx(2.0)) == 0.0);
  CHECK((a - a).max_abs() == 0.0);
}

TEST_CASE("projectors are 1-based") {
  const Matrix4 p = Matrix4::projector(3);
  CHECK(p(2, 2) == cplx(1.0));
  CHECK(p.trace() == cplx(1.0));
}

TEST_CASE("density matrix accepts valid states") {
  const DensityMatrix rho = DensityMatrix::pure(2);
  CHECK(rho.population(2) == 1.0);
  CHECK(rho.at(1, 1) == cplx(0.0));

  Matrix4 m = Matrix4::zero();
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = cplx(0.1, 0.2);
  m(1, 0) = cplx(0.1, -0.2);
  CHECK_NOTHROW(DensityMatrix{m});
}

TEST_CASE("density matrix rejects broken invariants") {
  auto kind_of = [](const Matrix4& m) {
    try {
      DensityMatrix d(m);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };

  Matrix4 non_hermitian = Matrix4::projector(1);
  non_hermitian(0, 1) = 0.1;
  CHECK(kind_of(non_hermitian) == ErrorKind::ValidationError);

  Matrix4 bad_trace = Matrix4::projector(1) * cplx(0.9);
  CHECK(kind_of(bad_trace) == ErrorKind::ValidationError);

  Matrix4 negative = Matrix4::zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK(kind_of(negative) == ErrorKind::ValidationError);

  Matrix4 nan = Matrix4::projector(1);
  nan(2, 3) = std::nan("");
  CHECK(kind_of(nan) == ErrorKind::ValidationError);

  CHECK_THROWS_AS(DensityMatrix::pure(0), Error);
  CHECK_THROWS_AS(DensityMatrix::pure(5), Error);
}

TEST_CASE("error messages carry the kind name") {
  try {
    raise(ErrorKind::LocalFieldPole, "x");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "LocalFieldPole: x");
  }
  CHECK(error_kind_name(ErrorKind::NoFeasiblePoint) == "NoFeasiblePoint");
}
