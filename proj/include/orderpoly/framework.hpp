#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "orderpoly/localized.hpp"
#include "orderpoly/memo.hpp"
#include "orderpoly/poset.hpp"
#include "orderpoly/qsym.hpp"
#include "orderpoly/unipoly.hpp"

namespace orderpoly {

enum class CarrierKind { Polynomial, Localized, QuasiSymmetric };

using CarrierValue = std::variant<UniPoly, LocalizedRatio, QSym>;

CarrierKind carrier_of(const CarrierValue& v);
const char* carrier_name(CarrierKind k);
std::string to_string(const CarrierValue& v);

class CarrierMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A named linear map on one carrier. Single-operator specs ignore the index
/// argument; family specs receive m = |S| >= 1.
struct LinearOperator {
    std::string name;
    CarrierKind carrier;
    std::function<CarrierValue(const CarrierValue&, unsigned m)> apply;
};

enum class RecursionMode { Single, Family };

/// Psi(empty) = base;
/// Single:  Psi(P) = Xi( sum_{nonempty omega-natural ideals S} Psi(P \ S) )
/// Family:  Psi(P) = sum_{nonempty omega-natural ideals S} Xi_{|S|}( Psi(P \ S) )
struct InvariantSpec {
    std::string name;
    CarrierValue base;
    RecursionMode mode = RecursionMode::Single;
    LinearOperator op;
};

using CarrierMemo = Memo<CarrierValue>;

/// Memoized on canonical labeled sub-posets. A shared memo must only ever be
/// used with one spec. Throws CarrierMismatch when base and operator live in
/// different carriers.
CarrierValue run_invariant(const InvariantSpec& spec, const LabeledPoset& lp, CarrierMemo* memo = nullptr);

LinearOperator delta_inverse_operator();
/// -nabla^{-1}
LinearOperator negative_nabla_inverse_operator();
/// Multiplication by lambda / (1 - lambda) on the localized ring.
LinearOperator m_lambda_operator();
/// Xi_m = multiplication by lambda (1 - lambda)^{m-1} on Q[lambda].
LinearOperator eulerian_family_operator();
/// Xi_m = Lambda_m on polynomials in the given number of variables.
LinearOperator lambda_family_operator(std::size_t variable_count);

InvariantSpec omega_spec();
InvariantSpec e_tilde_spec();
InvariantSpec eulerian_spec();
InvariantSpec qsym_spec(std::size_t variable_count);

/// "omega", "etilde", "eulerian" or "qsym:N". Throws std::invalid_argument.
InvariantSpec parse_invariant_spec(std::string_view text);

/// K(P, omega; x) in N variables via Lambda_m.
QSym qsym_recursive(const LabeledPoset& lp, std::size_t variable_count);

/// Small random element of the carrier: rational coefficients with numerator
/// in [-9, 9] and denominator in [1, 6].
CarrierValue random_carrier_value(CarrierKind kind, std::mt19937_64& rng, std::size_t variable_count = 3);

/// Xi(u + v) == Xi(u) + Xi(v) and Xi(c u) == c Xi(u) on `samples` random
/// triples (u, v, c); family operators are tested for m = 1..max_index.
bool check_linearity(const LinearOperator& op, std::mt19937_64& rng, std::size_t samples,
                     unsigned max_index = 1, std::size_t variable_count = 3);

CarrierValue add(const CarrierValue& a, const CarrierValue& b);
CarrierValue scale(const CarrierValue& a, const Rational& c);

} // namespace orderpoly
