#pragma once

#include <complex>
#include <functional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <Eigen/Core>

namespace Eigen {
template <>
struct NumTraits<boost::rational<std::int64_t>> : GenericNumTraits<boost::rational<std::int64_t>> {
  using Real = boost::rational<std::int64_t>;
  using NonInteger = boost::rational<std::int64_t>;
  using Nested = boost::rational<std::int64_t>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8,
  };
};
}  // namespace Eigen

namespace wzw {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using IMat = Mat<std::int64_t>;
using IVec = Vec<std::int64_t>;
using CMat = Mat<Complex>;
using CVec = Vec<Complex>;

// Stable codes; the CLI prints them verbatim.
enum class ErrorCode {
  InvalidInput,
  CapExceeded,
  NotImplemented,
  IntegralityFailure,
  InvariantFailure,
  PreconditionFailure,
  PhaseFixFailure,
  ConjectureViolation,
  CacheCorrupt,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double residual = 0.0)
      : std::runtime_error(what), code_(code), residual_(residual) {}
  ErrorCode code() const { return code_; }
  double residual() const { return residual_; }

 private:
  ErrorCode code_;
  double residual_;
};

// Carries the number of elements produced before the guard fired.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t partial, std::size_t cap)
      : Error(ErrorCode::CapExceeded,
              "Weyl group larger than cap " + std::to_string(cap) + " (stopped after " +
                  std::to_string(partial) + " elements)"),
        partial_(partial) {}
  std::size_t partial() const { return partial_; }

 private:
  std::size_t partial_;
};

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Fractional part in [0,1).
Rational frac(const Rational& q);

// exp(2 pi i q), evaluated after exact reduction mod 1.
Complex root_of_unity(const Rational& q);

double max_abs(const CMat& m);

// Exact inverse by Gauss-Jordan; throws on a singular matrix.
Mat<Rational> inverse(const Mat<Rational>& a);
Mat<Rational> to_rational(const IMat& a);

// Runs body(i) for i in [0,n) across hardware threads; body must only write disjoint data.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wzw
