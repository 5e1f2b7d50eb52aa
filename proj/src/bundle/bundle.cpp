#include "chow/bundle.hpp"

#include <algorithm>

#include "chow/errors.hpp"

namespace chow {

namespace {

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
  if (a != b) {
    throw RingMismatchError(std::string(op) + ": bundles live in different rings ('" + a->name() +
                            "' vs '" + b->name() + "')");
  }
}

}  // namespace

BundleClass::BundleClass(RingPtr ring, unsigned rank, std::vector<ChowClass> chern)
    : ring_(std::move(ring)), rank_(rank) {
  if (!ring_) throw BundleError("bundle: null ring");
  if (rank_ == 0) throw BundleError("bundle: rank must be positive");
  const unsigned top = std::min(rank_, ring_->dimension());
  for (std::size_t i = 0; i < chern.size(); ++i) {
    const unsigned deg = static_cast<unsigned>(i + 1);
    const ChowClass& c = chern[i];
    if (c.ring() != ring_) throw RingMismatchError("bundle: Chern class from a different ring");
    if (c.is_zero()) continue;
    if (c.homogeneous_degree() != deg) {
      throw BundleError("bundle: c_" + std::to_string(deg) + " is not homogeneous of degree " +
                        std::to_string(deg) + ": " + c.to_string());
    }
    if (deg > top) {
      throw BundleError("bundle: nonzero c_" + std::to_string(deg) + " beyond min(rank, dim) = " +
                        std::to_string(top));
    }
  }
  chern_.reserve(top);
  for (unsigned i = 0; i < top; ++i) {
    chern_.push_back(i < chern.size() ? chern[i] : ChowClass(ring_));
  }
}

BundleClass BundleClass::line(const ChowClass& c1) { return BundleClass(c1.ring(), 1, {c1}); }

BundleClass BundleClass::trivial(RingPtr ring, unsigned rank) {
  return BundleClass(std::move(ring), rank, {});
}

BundleClass BundleClass::from_total(unsigned rank, const ChowClass& total) {
  const unsigned top = std::min(rank, total.ring()->dimension());
  std::vector<ChowClass> chern;
  for (unsigned i = 1; i <= top; ++i) chern.push_back(total.component(i));
  return BundleClass(total.ring(), rank, std::move(chern));
}

ChowClass BundleClass::chern(unsigned i) const {
  if (i == 0) return ChowClass::scalar(ring_, 1);
  if (i > chern_.size()) return ChowClass(ring_);
  return chern_[i - 1];
}

ChowClass BundleClass::total_chern() const {
  ChowClass total = ChowClass::scalar(ring_, 1);
  for (const auto& c : chern_) total += c;
  return total;
}

BundleClass BundleClass::substitute_params(const ParamPoly::Bindings& bindings) const {
  std::vector<ChowClass> chern;
  for (const auto& c : chern_) chern.push_back(c.substitute_params(bindings));
  return BundleClass(ring_, rank_, std::move(chern));
}

ChowClass invert_unipotent(const ChowClass& c) {
  const RingPtr& ring = c.ring();
  if (c.component(0) != ChowClass::scalar(ring, 1)) {
    throw BundleError("invert: constant term must be 1, got " + c.to_string());
  }
  // 1/(1+n) = sum (-n)^i, and n is nilpotent above the dimension.
  const ChowClass neg_nil = ChowClass::scalar(ring, 1) - c;
  ChowClass result = ChowClass::scalar(ring, 1);
  ChowClass power = result;
  for (unsigned i = 1; i <= ring->dimension(); ++i) {
    power = power * neg_nil;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b) {
  require_same_ring(a.ring(), b.ring(), "whitney_sum");
  return BundleClass::from_total(a.rank() + b.rank(), a.total_chern() * b.total_chern());
}

ChowClass quotient_total_chern(const BundleClass& ambient, const BundleClass& sub) {
  require_same_ring(ambient.ring(), sub.ring(), "whitney_quotient");
  return ambient.total_chern() * invert_unipotent(sub.total_chern());
}

BundleClass whitney_quotient(const BundleClass& ambient, const BundleClass& sub) {
  if (sub.rank() >= ambient.rank()) {
    throw BundleError("whitney_quotient: sub-bundle rank must be smaller than the ambient rank");
  }
  const ChowClass total = quotient_total_chern(ambient, sub);
  const unsigned rank = ambient.rank() - sub.rank();
  ChowClass kept = ChowClass::scalar(ambient.ring(), 1);
  for (unsigned i = 1; i <= std::min(rank, ambient.ring()->dimension()); ++i) {
    kept += total.component(i);
  }
  return BundleClass::from_total(rank, kept);
}

BundleClass tensor_line(const BundleClass& e, const ChowClass& lambda) {
  if (lambda.ring() != e.ring()) throw RingMismatchError("tensor_line: twist from a different ring");
  if (!lambda.is_zero() && lambda.homogeneous_degree() != 1U) {
    throw BundleError("tensor_line: twisting class must have degree 1, got " + lambda.to_string());
  }
  const unsigned r = e.rank();
  const unsigned top = std::min(r, e.ring()->dimension());
  std::vector<ChowClass> chern;
  for (unsigned k = 1; k <= top; ++k) {
    ChowClass ck(e.ring());
    for (unsigned i = 0; i <= k; ++i) {
      ck += binomial(r - i, k - i) * (e.chern(i) * lambda.pow(k - i));
    }
    chern.push_back(ck);
  }
  return BundleClass(e.ring(), r, std::move(chern));
}

BundleClass dual(const BundleClass& e) {
  std::vector<ChowClass> chern;
  for (unsigned i = 1; i <= e.chern_classes().size(); ++i) {
    chern.push_back(i % 2 == 1 ? -e.chern(i) : e.chern(i));
  }
  return BundleClass(e.ring(), e.rank(), std::move(chern));
}

ChowClass det(const BundleClass& e) { return e.chern(1); }

ChowClass total_segre(const BundleClass& e) { return invert_unipotent(dual(e).total_chern()); }

ChowClass segre(const BundleClass& e, unsigned k) {
  if (k > e.ring()->dimension()) return ChowClass(e.ring());
  return total_segre(e).component(k);
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

MorphismData make_morphism(std::string name, RingPtr source, RingPtr target,
                           std::map<std::string, ChowClass> pullback,
                           std::optional<PushforwardSpec> pushforward) {
  if (!source || !target) throw MorphismError(name + ": null ring");
  for (const auto& gen : target->generators()) {
    auto it = pullback.find(gen.name);
    if (it == pullback.end()) {
      throw MorphismError(name + ": generator '" + gen.name + "' of '" + target->name() +
                          "' has no pullback");
    }
    if (it->second.ring() != source) {
      throw MorphismError(name + ": pullback of '" + gen.name + "' is not in '" + source->name() +
                          "'");
    }
    if (!it->second.is_zero() && it->second.homogeneous_degree() != gen.degree) {
      throw MorphismError(name + ": pullback of '" + gen.name + "' changes degree");
    }
  }
  for (const auto& [g, _] : pullback) {
    if (!target->generator_index(g)) {
      throw MorphismError(name + ": '" + g + "' is not a generator of '" + target->name() + "'");
    }
  }
  if (pushforward) {
    if (pushforward->bundle.ring() != target) {
      throw MorphismError(name + ": pushforward bundle must live on the target");
    }
    if (pushforward->bundle.rank() != pushforward->fiber_rank) {
      throw MorphismError(name + ": pushforward bundle rank differs from the fiber rank");
    }
    if (!source->generator_index(pushforward->tautological)) {
      throw MorphismError(name + ": unknown tautological generator '" +
                          pushforward->tautological + "'");
    }
  }
  return MorphismData{std::move(name), std::move(source), std::move(target), std::move(pullback),
                      std::move(pushforward)};
}

MorphismData compose(const MorphismData& outer, const MorphismData& inner) {
  if (inner.target != outer.source) {
    throw MorphismError("compose: '" + inner.name + "' does not land where '" + outer.name +
                        "' starts");
  }
  std::map<std::string, ChowClass> table;
  for (const auto& [g, c] : outer.pullback) table.emplace(g, pullback_class(inner, c));
  return make_morphism(outer.name + "∘" + inner.name, inner.source, outer.target,
                       std::move(table));
}

ChowClass pullback_class(const MorphismData& m, const ChowClass& c) {
  if (c.ring() != m.target) {
    throw RingMismatchError("pullback along " + m.name + ": class is not in '" + m.target->name() +
                            "'");
  }
  const auto& gens = m.target->generators();
  std::vector<const ChowClass*> images;
  for (const auto& g : gens) {
    auto it = m.pullback.find(g.name);
    if (it == m.pullback.end()) {
      throw MorphismError("pullback along " + m.name + ": unmapped generator '" + g.name + "'");
    }
    images.push_back(&it->second);
  }
  ChowClass out(m.source);
  for (const auto& [mono, coef] : c.terms()) {
    ChowClass term = ChowClass::scalar(m.source, coef);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (mono.exps[i] > 0) term = term * images[i]->pow(mono.exps[i]);
    }
    out += term;
  }
  return out;
}

BundleClass pullback_bundle(const MorphismData& m, const BundleClass& e) {
  if (e.ring() != m.target) {
    throw RingMismatchError("pullback along " + m.name + ": bundle is not on '" +
                            m.target->name() + "'");
  }
  std::vector<ChowClass> chern;
  for (const auto& c : e.chern_classes()) chern.push_back(pullback_class(m, c));
  // The source may have smaller dimension than the rank allows on the target.
  const unsigned top = std::min(e.rank(), m.source->dimension());
  chern.resize(std::min<std::size_t>(chern.size(), top), ChowClass(m.source));
  return BundleClass(m.source, e.rank(), std::move(chern));
}

ChowClass pushforward(const MorphismData& m, const ChowClass& c) {
  if (!m.pushforward) throw MorphismError(m.name + ": no pushforward structure");
  if (c.ring() != m.source) {
    throw RingMismatchError("pushforward along " + m.name + ": class is not in '" +
                            m.source->name() + "'");
  }
  const PushforwardSpec& spec = *m.pushforward;
  const RingDescriptor& src = *m.source;
  const std::size_t taut = *src.generator_index(spec.tautological);

  // Source generator index -> target generator index for base classes.
  std::vector<std::optional<std::size_t>> to_base(src.num_generators());
  const auto& tgens = m.target->generators();
  for (std::size_t t = 0; t < tgens.size(); ++t) {
    const ChowClass& image = m.pullback.at(tgens[t].name);
    if (image.terms().size() != 1) {
      throw MorphismError(m.name + ": pullback of '" + tgens[t].name + "' is not a generator");
    }
    const auto& [mono, coef] = *image.terms().begin();
    auto nonzero = std::count_if(mono.exps.begin(), mono.exps.end(), [](unsigned e) { return e; });
    if (coef != ParamPoly(1) || nonzero != 1) {
      throw MorphismError(m.name + ": pullback of '" + tgens[t].name + "' is not a generator");
    }
    for (std::size_t s = 0; s < mono.exps.size(); ++s) {
      if (mono.exps[s] == 1) to_base[s] = t;
    }
  }

  const ChowClass segre_total = total_segre(spec.bundle);
  ChowClass out(m.target);
  for (const auto& [mono, coef] : c.terms()) {
    Monomial base = m.target->unit();
    for (std::size_t s = 0; s < mono.exps.size(); ++s) {
      if (s == taut || mono.exps[s] == 0) continue;
      if (!to_base[s]) {
        throw MorphismError("pushforward along " + m.name + ": monomial " +
                            src.monomial_to_string(mono) +
                            " is not a tautological power times a base class");
      }
      base.exps[*to_base[s]] += mono.exps[s];
    }
    const long k = static_cast<long>(mono.exps[taut]) - static_cast<long>(spec.fiber_rank) + 1;
    if (k < 0) continue;
    out += coef * (segre_total.component(static_cast<unsigned>(k)) *
                   ChowClass::monomial(m.target, base));
  }
  return out;
}

}  // namespace chow
