#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weilzeta/error.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/packed_field.hpp"

using namespace weilzeta;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

struct FieldCase {
  std::uint64_t p;
  unsigned k;
};

const FieldCase kSmallFields[] = {{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2},
                                  {5, 2}, {3, 3}, {2, 4}, {7, 2}, {3, 4}};

}  // namespace

TEST_CASE("prime field arithmetic") {
  auto f5 = make_extension(5, 1);
  auto three = FieldElement::from_integer(f5, 3);
  auto four = FieldElement::from_integer(f5, 4);
  CHECK(three + four == FieldElement::from_integer(f5, 2));
  CHECK(FieldElement::from_integer(f5, 2).inverse() == three);
  CHECK(FieldElement::from_integer(f5, -1) == four);
}

TEST_CASE("moduli are the smallest irreducibles") {
  CHECK(make_extension(2, 1)->modulus() == std::vector<std::uint64_t>{0, 1});
  for (auto [p, k] : kSmallFields) {
    CAPTURE(p);
    CAPTURE(k);
    CHECK(make_extension(p, k)->modulus() == oracle::smallest_irreducible(p, k));
  }
  CHECK(make_extension(5, 2)->modulus() == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("x * x reduces modulo the field modulus in F_4") {
  auto f4 = make_extension(2, 2);
  auto x = FieldElement::generator(f4);
  const auto& m = f4->modulus();
  // x^2 = -(m0 + m1 x)
  std::vector<std::uint64_t> expected{(2 - m[0]) % 2, (2 - m[1]) % 2};
  CHECK((x * x).coefficients() == expected);
  CHECK((x * x).coefficients() == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("irreducibility test agrees with trial division and the necklace count") {
  for (std::uint64_t p : {2ULL, 3ULL}) {
    for (unsigned n = 1; n <= (p == 2 ? 7u : 4u); ++n) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < n; ++i) total *= p;
      std::uint64_t irreducible = 0;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint64_t> f(n + 1);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < n; ++i) {
          f[i] = t % p;
          t /= p;
        }
        f[n] = 1;
        bool lib = is_irreducible(f, p);
        CHECK(lib == oracle::irreducible_by_trial_division(f, p));
        irreducible += lib ? 1 : 0;
      }
      CHECK(irreducible == oracle::necklace_count(p, n));
    }
  }
}

TEST_CASE("field construction errors") {
  CHECK(throws_kind(ErrorKind::NotPrime, [] { make_extension(4, 1); }));
  CHECK(throws_kind(ErrorKind::NotPrime, [] { PrimeField(BigInt(1)); }));
  CHECK(throws_kind(ErrorKind::NotPrime, [] { PrimeField(BigInt("18446744073709551617")); }));
  CHECK_NOTHROW(PrimeField(BigInt("2305843009213693951")));
  CHECK(throws_kind(ErrorKind::UnsupportedField, [] { make_extension(BigInt("2305843009213693951"), 1); }));
  CHECK(throws_kind(ErrorKind::UnsupportedField, [] { make_extension_with_modulus(2, {1, 0, 1}); }));
  CHECK(make_extension(2147483647, 1)->cardinality() == 2147483647);
}

TEST_CASE("mixed fields and division by zero") {
  auto f4 = make_extension(2, 2);
  auto f8 = make_extension(2, 3);
  CHECK(throws_kind(ErrorKind::MixedFields, [&] { (void)(FieldElement::one(f4) + FieldElement::one(f8)); }));
  CHECK(throws_kind(ErrorKind::DivisionByZero, [&] { (void)FieldElement::zero(f4).inverse(); }));
  CHECK(throws_kind(ErrorKind::DivisionByZero,
                    [&] { (void)(FieldElement::one(f4) / FieldElement::zero(f4)); }));
  // Same field built twice is the same field.
  auto f4b = make_extension(2, 2);
  CHECK(FieldElement::one(f4) + FieldElement::one(f4b) == FieldElement::zero(f4));
}

TEST_CASE("enumeration order") {
  auto values = [](const FieldPtr& f) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& e : enumerate_elements(f)) out.push_back(e.coefficients());
    return out;
  };
  CHECK(values(make_extension(2, 1)) == std::vector<std::vector<std::uint64_t>>{{0}, {1}});
  CHECK(values(make_extension(3, 1)) == std::vector<std::vector<std::uint64_t>>{{0}, {1}, {2}});
  auto f9 = make_extension(3, 2);
  auto all = values(f9);
  REQUIRE(all.size() == 9);
  CHECK(all.front() == std::vector<std::uint64_t>{0, 0});
  CHECK(all.back() == std::vector<std::uint64_t>{2, 2});
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (std::uint64_t i = 0; i < 9; ++i) CHECK(element_at(f9, i).coefficients() == all[i]);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20261018);
  for (auto [p, k] : kSmallFields) {
    auto f = make_extension(p, k);
    std::uint64_t size = f->cardinality().get_ui();
    BigInt order = f->cardinality() - 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    auto zero = FieldElement::zero(f);
    auto one = FieldElement::one(f);
    bool ok = true;
    for (int trial = 0; trial < 10000 && ok; ++trial) {
      auto a = element_at(f, pick(rng));
      auto b = element_at(f, pick(rng));
      auto c = element_at(f, pick(rng));
      ok = ok && (a + b) + c == a + (b + c);
      ok = ok && (a * b) * c == a * (b * c);
      ok = ok && a + b == b + a && a * b == b * a;
      ok = ok && a * (b + c) == a * b + a * c;
      ok = ok && a + zero == a && a * one == a && a + (-a) == zero;
      ok = ok && (a + b).frobenius() == a.frobenius() + b.frobenius();
      ok = ok && (a * b).frobenius() == a.frobenius() * b.frobenius();
      if (!a.is_zero()) {
        ok = ok && a * a.inverse() == one;
        ok = ok && a.pow(order) == one;
        ok = ok && (b / a) * a == b;
      }
    }
    CAPTURE(p);
    CAPTURE(k);
    CHECK(ok);
  }
}

TEST_CASE("library multiplication matches naive reduction") {
  for (auto [p, k] : kSmallFields) {
    auto f = make_extension(p, k);
    oracle::NaiveField naive{p, f->modulus()};
    std::uint64_t size = naive.size();
    bool ok = true;
    for (std::uint64_t i = 0; i < size && ok; ++i) {
      for (std::uint64_t j = 0; j < size && ok; ++j) {
        auto a = naive.element(i), b = naive.element(j);
        ok = (FieldElement(f, a) * FieldElement(f, b)).coefficients() == naive.mul(a, b) &&
             (FieldElement(f, a) + FieldElement(f, b)).coefficients() == naive.add(a, b);
      }
    }
    CAPTURE(p);
    CAPTURE(k);
    CHECK(ok);
  }
}

TEST_CASE("packed arithmetic agrees with field elements") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {FieldCase{2, 4}, FieldCase{3, 3}, FieldCase{7, 1}, FieldCase{2, 21}, FieldCase{101, 3}}) {
    auto f = make_extension(p, k);
    PackedField packed(f);
    CHECK(packed.has_log_tables() == (packed.size() <= PackedField::kLogTableLimit));
    std::uniform_int_distribution<std::uint64_t> pick(0, packed.size() - 1);
    bool ok = true;
    for (int trial = 0; trial < 2000 && ok; ++trial) {
      auto a = pick(rng), b = pick(rng);
      auto ea = packed.decode(a), eb = packed.decode(b);
      ok = packed.encode(ea) == a;
      ok = ok && packed.decode(packed.add(a, b)) == ea + eb;
      ok = ok && packed.decode(packed.sub(a, b)) == ea - eb;
      ok = ok && packed.decode(packed.mul(a, b)) == ea * eb;
      if (a != 0) ok = ok && packed.decode(packed.inv(a)) == ea.inverse();
      ok = ok && packed.decode(packed.pow(a, 5)) == ea.pow(5);
    }
    CAPTURE(p);
    CAPTURE(k);
    CHECK(ok);
  }
}
