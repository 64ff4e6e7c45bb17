#include "orderpoly/framework.hpp"

#include <charconv>
#include <sstream>

#include "orderpoly/order_poly.hpp"

namespace orderpoly {

CarrierKind carrier_of(const CarrierValue& v)
{
    switch (v.index()) {
    case 0:
        return CarrierKind::Polynomial;
    case 1:
        return CarrierKind::Localized;
    default:
        return CarrierKind::QuasiSymmetric;
    }
}

const char* carrier_name(CarrierKind k)
{
    switch (k) {
    case CarrierKind::Polynomial:
        return "polynomial";
    case CarrierKind::Localized:
        return "localized";
    case CarrierKind::QuasiSymmetric:
        return "quasisymmetric";
    }
    return "?";
}

std::string to_string(const CarrierValue& v)
{
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

CarrierValue add(const CarrierValue& a, const CarrierValue& b)
{
    if (a.index() != b.index()) {
        throw CarrierMismatch("cannot add values from different carriers");
    }
    return std::visit(
        [&](const auto& x) -> CarrierValue {
            using T = std::decay_t<decltype(x)>;
            return x + std::get<T>(b);
        },
        a);
}

CarrierValue scale(const CarrierValue& a, const Rational& c)
{
    return std::visit([&](const auto& x) -> CarrierValue { return x * c; }, a);
}

namespace {

CarrierValue run(const InvariantSpec& spec, const LabeledPoset& lp, CarrierMemo& memo)
{
    if (lp.size() == 0) {
        return spec.base;
    }
    const std::string key = labeled_key(lp);
    if (auto hit = memo.find(key)) {
        return *hit;
    }
    const ElementSet all = lp.poset().elements();
    CarrierValue total = scale(spec.base, 0);
    for (ElementSet s : omega_natural_ideals(lp)) {
        if (s.empty()) {
            continue;
        }
        CarrierValue sub = run(spec, induced_subposet(lp, all - s), memo);
        if (spec.mode == RecursionMode::Family) {
            sub = spec.op.apply(sub, static_cast<unsigned>(s.size()));
        }
        total = add(total, sub);
    }
    if (spec.mode == RecursionMode::Single) {
        total = spec.op.apply(total, 0);
    }
    memo.insert(key, total);
    return total;
}

template <class T>
const T& expect(const CarrierValue& v, const char* op)
{
    if (const T* p = std::get_if<T>(&v)) {
        return *p;
    }
    throw CarrierMismatch(std::string(op) + ": argument has the wrong carrier");
}

} // namespace

CarrierValue run_invariant(const InvariantSpec& spec, const LabeledPoset& lp, CarrierMemo* memo)
{
    if (carrier_of(spec.base) != spec.op.carrier) {
        throw CarrierMismatch("invariant spec '" + spec.name + "': base is " + carrier_name(carrier_of(spec.base))
                              + " but operator '" + spec.op.name + "' acts on " + carrier_name(spec.op.carrier));
    }
    CarrierMemo local;
    return run(spec, lp, memo ? *memo : local);
}

LinearOperator delta_inverse_operator()
{
    return {"delta-inverse", CarrierKind::Polynomial, [](const CarrierValue& v, unsigned) -> CarrierValue {
                return delta_inverse(expect<UniPoly>(v, "delta-inverse"));
            }};
}

LinearOperator negative_nabla_inverse_operator()
{
    return {"negative-nabla-inverse", CarrierKind::Polynomial, [](const CarrierValue& v, unsigned) -> CarrierValue {
                return -nabla_inverse(expect<UniPoly>(v, "negative-nabla-inverse"));
            }};
}

LinearOperator m_lambda_operator()
{
    return {"multiply-lambda-over-one-minus-lambda", CarrierKind::Localized,
            [factor = lambda_over_one_minus_lambda()](const CarrierValue& v, unsigned) -> CarrierValue {
                return factor * expect<LocalizedRatio>(v, "multiply-lambda-over-one-minus-lambda");
            }};
}

LinearOperator eulerian_family_operator()
{
    return {"multiply-lambda-one-minus-lambda-power", CarrierKind::Polynomial,
            [](const CarrierValue& v, unsigned m) -> CarrierValue {
                if (m == 0) {
                    throw std::invalid_argument("family operator index must be at least 1");
                }
                const UniPoly lambda = UniPoly::identity("lambda");
                return lambda * one_minus("lambda").pow(m - 1)
                       * expect<UniPoly>(v, "multiply-lambda-one-minus-lambda-power");
            }};
}

LinearOperator lambda_family_operator(std::size_t variable_count)
{
    return {"Lambda", CarrierKind::QuasiSymmetric, [variable_count](const CarrierValue& v, unsigned m) -> CarrierValue {
                const QSym& f = expect<QSym>(v, "Lambda");
                if (f.variable_count() != variable_count) {
                    throw CarrierMismatch("Lambda: variable count differs from the operator's");
                }
                return lambda_m(f, m);
            }};
}

InvariantSpec omega_spec()
{
    return {"omega", UniPoly::constant(1), RecursionMode::Single, delta_inverse_operator()};
}

InvariantSpec e_tilde_spec()
{
    return {"etilde", LocalizedRatio(UniPoly::constant(1, "lambda"), 1), RecursionMode::Single, m_lambda_operator()};
}

InvariantSpec eulerian_spec()
{
    return {"eulerian", UniPoly::constant(1, "lambda"), RecursionMode::Family, eulerian_family_operator()};
}

InvariantSpec qsym_spec(std::size_t variable_count)
{
    if (variable_count == 0) {
        throw std::invalid_argument("qsym spec needs at least one variable");
    }
    return {"qsym:" + std::to_string(variable_count), QSym::one(variable_count), RecursionMode::Family,
            lambda_family_operator(variable_count)};
}

InvariantSpec parse_invariant_spec(std::string_view text)
{
    if (text == "omega") {
        return omega_spec();
    }
    if (text == "etilde") {
        return e_tilde_spec();
    }
    if (text == "eulerian") {
        return eulerian_spec();
    }
    constexpr std::string_view prefix = "qsym:";
    if (text.starts_with(prefix)) {
        const std::string_view digits = text.substr(prefix.size());
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 1 && n <= 32) {
            return qsym_spec(n);
        }
        throw std::invalid_argument("qsym spec needs a variable count between 1 and 32, got '"
                                    + std::string(digits) + "'");
    }
    throw std::invalid_argument("unknown invariant spec '" + std::string(text)
                                + "' (expected omega, etilde, eulerian or qsym:N)");
}

QSym qsym_recursive(const LabeledPoset& lp, std::size_t variable_count)
{
    return std::get<QSym>(run_invariant(qsym_spec(variable_count), lp));
}

namespace {

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

UniPoly random_poly(std::mt19937_64& rng, const std::string& var)
{
    std::uniform_int_distribution<int> deg(0, 5);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
        x = random_rational(rng);
    }
    return UniPoly(std::move(c), var);
}

} // namespace

CarrierValue random_carrier_value(CarrierKind kind, std::mt19937_64& rng, std::size_t variable_count)
{
    switch (kind) {
    case CarrierKind::Polynomial:
        return random_poly(rng, "t");
    case CarrierKind::Localized: {
        std::uniform_int_distribution<unsigned> pole(0, 3);
        return LocalizedRatio(random_poly(rng, "lambda"), pole(rng));
    }
    case CarrierKind::QuasiSymmetric: {
        QSym f(variable_count);
        std::uniform_int_distribution<int> count(0, 6);
        std::uniform_int_distribution<int> exponent(0, 2);
        const int terms = count(rng);
        for (int i = 0; i < terms; ++i) {
            QSym::Exponents e(variable_count);
            for (auto& x : e) {
                x = static_cast<std::uint8_t>(exponent(rng));
            }
            f.add_term(e, random_rational(rng));
        }
        return f;
    }
    }
    throw std::logic_error("unknown carrier");
}

bool check_linearity(const LinearOperator& op, std::mt19937_64& rng, std::size_t samples, unsigned max_index,
                     std::size_t variable_count)
{
    for (std::size_t i = 0; i < samples; ++i) {
        const CarrierValue u = random_carrier_value(op.carrier, rng, variable_count);
        const CarrierValue v = random_carrier_value(op.carrier, rng, variable_count);
        const Rational c = random_rational(rng);
        for (unsigned m = 1; m <= max_index; ++m) {
            if (op.apply(add(u, v), m) != add(op.apply(u, m), op.apply(v, m))) {
                return false;
            }
            if (op.apply(scale(u, c), m) != scale(op.apply(u, m), c)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace orderpoly
