#include "weilzeta/variety.hpp"

#include <algorithm>
#include <thread>

#include "weilzeta/error.hpp"

namespace weilzeta {

VarietySpec validate(VarietySpec spec) {
  try {
    PrimeField base(spec.p);
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
  auto p = to_u64(spec.p);
  if (!p || *p > kMaxCharacteristic) {
    throw Error(ErrorKind::MalformedSpec, "characteristic " + spec.p.get_str() + " exceeds 2^31 - 1");
  }
  if (spec.k == 0) throw Error(ErrorKind::MalformedSpec, "k must be positive");
  const unsigned coords = spec.ambient.coordinates();
  for (std::size_t e = 0; e < spec.equations.size(); ++e) {
    Equation kept;
    for (auto& term : spec.equations[e]) {
      if (term.exponents.size() != coords) {
        throw Error(ErrorKind::MalformedSpec, "equation " + std::to_string(e) + ": exponent vector has length " +
                                                  std::to_string(term.exponents.size()) + ", expected " +
                                                  std::to_string(coords));
      }
      if (term.coefficient.size() != spec.k) {
        throw Error(ErrorKind::MalformedSpec, "equation " + std::to_string(e) + ": coefficient must have " +
                                                  std::to_string(spec.k) + " entries");
      }
      for (auto& c : term.coefficient) c %= *p;
      if (std::all_of(term.coefficient.begin(), term.coefficient.end(), [](auto c) { return c == 0; })) continue;
      kept.push_back(std::move(term));
    }
    if (spec.ambient.kind == AmbientKind::Projective && !kept.empty()) {
      auto total = [](const Term& t) {
        unsigned long s = 0;
        for (auto x : t.exponents) s += x;
        return s;
      };
      const auto degree = total(kept.front());
      for (const auto& t : kept) {
        if (total(t) != degree) {
          throw Error(ErrorKind::MalformedSpec, "equation " + std::to_string(e) + " is not homogeneous");
        }
      }
    }
    spec.equations[e] = std::move(kept);
  }
  return spec;
}

BigInt domain_size(const VarietySpec& spec, unsigned n) {
  const BigInt qn = pow(spec.q(), n);
  if (spec.ambient.kind == AmbientKind::Affine) return pow(qn, spec.ambient.dim);
  BigInt total = 0;
  for (unsigned j = 0; j <= spec.ambient.dim; ++j) total += pow(qn, j);
  return total;
}

PointCounter::PointCounter(const VarietySpec& raw, unsigned n, const CountOptions& options)
    : workers_(std::max(1U, options.workers)),
      coords_(0),
      projective_(false),
      field_size_(0),
      domain_(0) {
  if (n == 0) throw Error(ErrorKind::MalformedSpec, "extension degree n must be positive");
  const VarietySpec spec = validate(raw);
  coords_ = spec.ambient.coordinates();
  projective_ = spec.ambient.kind == AmbientKind::Projective;

  const BigInt required = weilzeta::domain_size(spec, n);
  if (required > options.budget) {
    throw Error(ErrorKind::BudgetExceeded, "enumeration needs " + required.get_str() + " points, budget is " +
                                               options.budget.get_str());
  }
  domain_ = *to_u64(required);

  // With no coordinates the equations are constants of F_q, and whether
  // they vanish does not depend on the extension.
  const unsigned degree = coords_ == 0 ? spec.k : spec.k * n;
  field_ = std::make_unique<PackedField>(make_extension(spec.p, degree));
  field_size_ = field_->size();

  if (projective_) {
    for (unsigned j = 0; j < coords_; ++j) block_sizes_.push_back(*to_u64(pow(from_u64(field_size_), coords_ - 1 - j)));
  }

  // Image of the generator of F_q = F_p[x]/(m) inside the counting field:
  // the smallest root of m in code order.
  PackedField::Code root = 0;
  if (spec.k > 1) {
    const auto modulus = make_extension(spec.p, spec.k)->modulus();
    bool found = false;
    for (PackedField::Code c = 0; c < field_size_ && !found; ++c) {
      PackedField::Code acc = 0;
      for (std::size_t i = modulus.size(); i-- > 0;) acc = field_->add(field_->mul(acc, c), modulus[i]);
      if (acc == 0) {
        root = c;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::UnsupportedField, "base field does not embed in the counting field");
  }

  for (const auto& eq : spec.equations) {
    std::vector<PackedTerm> packed;
    for (const auto& t : eq) {
      PackedTerm pt{};
      PackedField::Code value = 0;
      PackedField::Code power = PackedField::one();
      for (auto c : t.coefficient) {
        value = field_->add(value, field_->mul(c, power));
        power = field_->mul(power, root);
      }
      pt.coefficient = value;
      pt.coefficient_log = field_->has_log_tables() ? field_->log(value) : 0;
      for (unsigned j = 0; j < t.exponents.size(); ++j) {
        if (t.exponents[j] > 0) pt.powers.emplace_back(j, t.exponents[j]);
      }
      packed.push_back(std::move(pt));
    }
    equations_.push_back(std::move(packed));
  }
}

bool PointCounter::satisfies(const std::vector<PackedField::Code>& point) const {
  const PackedField& f = *field_;
  if (f.has_log_tables()) {
    const std::uint64_t order = f.multiplicative_order();
    for (const auto& eq : equations_) {
      PackedField::Code acc = 0;
      for (const auto& t : eq) {
        std::uint64_t log_sum = t.coefficient_log;
        bool vanishes = false;
        for (const auto& [var, e] : t.powers) {
          const PackedField::Code x = point[var];
          if (x == 0) {
            vanishes = true;
            break;
          }
          log_sum += static_cast<std::uint64_t>(f.log(x)) * e;
        }
        if (!vanishes) acc = f.add(acc, f.exp(log_sum % order));
      }
      if (acc != 0) return false;
    }
    return true;
  }
  for (const auto& eq : equations_) {
    PackedField::Code acc = 0;
    for (const auto& t : eq) {
      PackedField::Code value = t.coefficient;
      for (const auto& [var, e] : t.powers) value = f.mul(value, f.pow(point[var], e));
      acc = f.add(acc, value);
    }
    if (acc != 0) return false;
  }
  return true;
}

std::uint64_t PointCounter::count_range(std::uint64_t begin, std::uint64_t end) const {
  end = std::min(end, domain_);
  if (begin >= end) return 0;
  const std::uint64_t q = field_size_;
  std::vector<PackedField::Code> point(coords_, 0);
  unsigned block = 0;
  std::uint64_t offset = begin;
  if (projective_) {
    while (offset >= block_sizes_[block]) offset -= block_sizes_[block++];
    point[block] = PackedField::one();
  }
  unsigned first_free = projective_ ? block + 1 : 0;
  for (unsigned j = coords_; j-- > first_free;) {
    point[j] = offset % q;
    offset /= q;
  }

  std::uint64_t count = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (satisfies(point)) ++count;
    bool carried_out = true;
    for (unsigned j = coords_; j-- > first_free;) {
      if (++point[j] < q) {
        carried_out = false;
        break;
      }
      point[j] = 0;
    }
    if (carried_out && projective_ && block + 1 < coords_) {
      point[block] = 0;
      ++block;
      point[block] = PackedField::one();
      first_free = block + 1;
    }
  }
  return count;
}

std::uint64_t PointCounter::count() const {
  const std::uint64_t workers = std::min<std::uint64_t>(workers_, std::max<std::uint64_t>(1, domain_ / 4096));
  if (workers <= 1) return count_range(0, domain_);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (domain_ + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] { partial[w] = count_range(w * chunk, std::min(domain_, (w + 1) * chunk)); });
  }
  for (auto& t : threads) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

std::uint64_t count_points(const VarietySpec& spec, unsigned n, const CountOptions& options) {
  return PointCounter(spec, n, options).count();
}

PointCountSeries count_series(const VarietySpec& spec, unsigned terms, const CountOptions& options) {
  PointCountSeries series{spec.q(), {}};
  for (unsigned n = 1; n <= terms; ++n) {
    try {
      series.counts.push_back(from_u64(count_points(spec, n, options)));
    } catch (const Error& e) {
      throw Error(e.kind(), "n=" + std::to_string(n) + ": " + e.message());
    }
  }
  return series;
}

VarietySpec weierstrass_spec(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  VarietySpec spec;
  spec.label = "y^2 z = x^3 + " + std::to_string(a) + " x z^2 + " + std::to_string(b) + " z^3";
  spec.p = from_u64(p);
  spec.k = 1;
  spec.ambient = {AmbientKind::Projective, 2};
  spec.equations.push_back({
      Term{{1}, {0, 2, 1}},
      Term{{p - 1}, {3, 0, 0}},
      Term{{(p - a % p) % p}, {1, 0, 2}},
      Term{{(p - b % p) % p}, {0, 0, 3}},
  });
  return validate(std::move(spec));
}

}  // namespace weilzeta
