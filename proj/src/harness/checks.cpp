#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "envelope/error.hpp"
#include "envelope/group_ops.hpp"
#include "envelope/harness.hpp"

namespace envelope {

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids{
      check_id::kDoubleCentralizerAbelian, check_id::kTowerRestriction,
      check_id::kCentralizerCenterAgreement, check_id::kEnvelopeNilpotency,
      check_id::kEnvelopeStabilization, check_id::kEnvelopeSolvable,
      check_id::kChainShape, check_id::kHypercenterContainment,
      check_id::kHypercenterAscent};
  return ids;
}

bool is_check_id(const std::string& id) {
  const auto& ids = all_check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

const SmallOrdinal kOmega = SmallOrdinal::omega();

std::vector<std::string> labels_of(const GroupPtr& g, std::span<const ElementId> ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (auto x : ids) out.push_back(g->label(x));
  return out;
}

std::vector<std::string> generator_labels(const Subgroup& s) {
  auto gens = small_generating_set(s);
  return labels_of(s.parent(), gens);
}

std::optional<ElementId> outside(const Subgroup& a, const Subgroup& b) {
  for (auto x : a.members()) {
    if (!b.contains(x)) return x;
  }
  return std::nullopt;
}

std::optional<ElementId> symmetric_difference(const Subgroup& a, const Subgroup& b) {
  if (auto x = outside(a, b)) return x;
  return outside(b, a);
}

Subgroup subgroup_from_labels(const GroupPtr& g, const std::vector<std::string>& labels) {
  std::vector<ElementId> ids;
  for (const auto& l : labels) {
    auto id = g->find_label(l);
    if (!id) throw Error(ErrorCode::InvalidArgument, "unknown element label \"" + l + "\"");
    ids.push_back(*id);
  }
  return generated_subgroup(g, ids);
}

ElementId element(const GroupPtr& g, const std::string& label) {
  auto id = g->find_label(label);
  if (!id) throw Error(ErrorCode::InvalidArgument, "unknown element label \"" + label + "\"");
  return *id;
}

// Chains and series for one subgroup, computed on first use.
class Context {
 public:
  explicit Context(const Subgroup& h) : h_(h), whole_(Subgroup::whole(h.parent())) {}

  const Subgroup& h() const { return h_; }
  const GroupPtr& group() const { return h_.parent(); }
  const Subgroup& whole() const { return whole_; }

  const ChainRecord& envelopes() {
    if (!env_) env_ = envelope_chain(whole_, h_, kOmega);
    return *env_;
  }
  const ChainRecord& centralizers() {
    if (!cen_) cen_ = iterated_centralizer_chain(whole_, h_, kOmega);
    return *cen_;
  }
  const Subgroup& envelope(SmallOrdinal lambda) { return envelopes().term(lambda); }

  std::optional<std::uint64_t> h_class() {
    if (!h_class_) h_class_ = nilpotency_class(h_);
    return *h_class_;
  }

  /// C^a of h inside E_lambda, recorded through w.
  const ChainRecord& inner_centralizers(SmallOrdinal lambda) {
    auto it = inner_.find(lambda);
    if (it == inner_.end()) {
      it = inner_.emplace(lambda, iterated_centralizer_chain(envelope(lambda), h_, kOmega)).first;
    }
    return it->second;
  }
  /// Z_a(E_lambda), recorded through w.
  const ChainRecord& envelope_centers(SmallOrdinal lambda) {
    auto it = centers_.find(lambda);
    if (it == centers_.end()) {
      it = centers_.emplace(lambda, upper_central_series(envelope(lambda), kOmega).chain).first;
    }
    return it->second;
  }

  /// 0 .. s+2 and w, where s is the stabilization index of the envelopes.
  std::vector<SmallOrdinal> lambda_range() {
    auto s = envelopes().stabilization();
    if (!s || !s->is_finite()) {
      throw Error(ErrorCode::NotYetStable, "envelope chain did not stabilize below w");
    }
    std::vector<SmallOrdinal> out;
    for (std::uint64_t k = 0; k <= s->finite_part() + 2; ++k) out.emplace_back(k);
    out.push_back(kOmega);
    return out;
  }

 private:
  Subgroup h_;
  Subgroup whole_;
  std::optional<ChainRecord> env_, cen_;
  std::optional<std::optional<std::uint64_t>> h_class_;
  std::map<SmallOrdinal, ChainRecord> inner_, centers_;
};

// Finite indices 0..F together with every recorded infinite index <= lambda,
// where F covers every stabilization point of the given chains.
std::vector<SmallOrdinal> indices_upto(SmallOrdinal lambda, std::initializer_list<const ChainRecord*> chains) {
  std::vector<SmallOrdinal> out;
  std::uint64_t last_finite = 0;
  if (lambda.is_finite()) {
    last_finite = lambda.finite_part();
  } else {
    for (const auto* c : chains) {
      for (const auto& t : c->terms()) {
        if (t.index.is_finite()) last_finite = std::max(last_finite, t.index.finite_part() + 1);
      }
    }
  }
  for (std::uint64_t k = 0; k <= last_finite; ++k) out.emplace_back(k);
  for (const auto* c : chains) {
    for (const auto& t : c->terms()) {
      if (!t.index.is_finite() && t.index <= lambda) out.push_back(t.index);
    }
  }
  if (!lambda.is_finite()) out.push_back(lambda);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CheckReport base_report(const char* id, const Subgroup& h) {
  CheckReport r;
  r.check_id = id;
  r.subgroup_generators = generator_labels(h);
  return r;
}

void skip(CheckReport& r, const char* unmet, std::string reason) {
  r.verdict = Verdict::Skipped;
  r.parameters["unmet"] = unmet;
  r.reason = std::move(reason);
}

void fail(CheckReport& r, const char* relation, std::string reason, std::vector<std::string> witness) {
  r.verdict = Verdict::Fail;
  r.parameters["relation"] = relation;
  r.reason = std::move(reason);
  r.witness = std::move(witness);
}

// Records a failure when the two sides differ. Returns true on failure.
bool expect_equal(CheckReport& r, const char* relation, const Subgroup& lhs, const Subgroup& rhs,
                  const std::string& what) {
  auto x = symmetric_difference(lhs, rhs);
  if (!x) return false;
  fail(r, relation, what + " differ", {lhs.group().label(*x)});
  return true;
}

bool expect_subset(CheckReport& r, const char* relation, const Subgroup& lhs, const Subgroup& rhs,
                   const std::string& what) {
  auto x = outside(lhs, rhs);
  if (!x) return false;
  fail(r, relation, what, {lhs.group().label(*x)});
  return true;
}

// ---- individual checks on a shared context --------------------------------

CheckReport double_centralizer_abelian(Context& ctx) {
  auto r = base_report(check_id::kDoubleCentralizerAbelian, ctx.h());
  if (!is_abelian(ctx.h())) {
    skip(r, "abelian", "H is not abelian");
    return r;
  }
  auto dc = centralizer_of(ctx.whole(), centralizer_of(ctx.whole(), ctx.h()));
  const auto& g = ctx.group();
  for (auto x : dc.members()) {
    for (auto y : dc.members()) {
      if (!g->commute(x, y)) {
        fail(r, "noncommuting_pair", "C(C(H)) contains a non-commuting pair",
             {g->label(x), g->label(y)});
        return r;
      }
    }
  }
  return r;
}

struct TowerSides {
  ChainRecord cca, ccb, cba, zc, zb;
};

TowerSides tower_sides(const Subgroup& c, const Subgroup& b, const Subgroup& a, SmallOrdinal lambda) {
  auto next = lambda.successor();
  return {iterated_centralizer_chain(c, a, next), iterated_centralizer_chain(c, b, lambda),
          iterated_centralizer_chain(b, a, next), upper_central_series(c, lambda).chain,
          upper_central_series(b, lambda).chain};
}

// Fills `r` for one tower; leaves the verdict untouched when everything holds.
void tower_restriction_into(CheckReport& r, const Subgroup& c, const Subgroup& b, const Subgroup& a,
                            SmallOrdinal lambda) {
  r.parameters["lambda"] = lambda.to_string();
  if (!a.is_subset_of(b) || !b.is_subset_of(c)) {
    skip(r, "tower", "the subgroups do not form a tower A <= B <= C");
    return;
  }
  auto s = tower_sides(c, b, a, lambda);
  auto indices = indices_upto(lambda, {&s.cca, &s.ccb, &s.cba, &s.zc, &s.zb});
  for (auto alpha : indices) {
    if (!(s.cca.term(alpha) == s.zc.term(alpha))) {
      r.parameters["alpha"] = alpha.to_string();
      skip(r, "hypothesis", "C^a_C(A) differs from Z_a(C) at a = " + alpha.to_string());
      return;
    }
  }
  for (auto alpha : indices) {
    r.parameters["alpha"] = alpha.to_string();
    if (expect_equal(r, "tower_i_centralizers", s.cca.term(alpha), s.ccb.term(alpha),
                     "C^a_C(A) and C^a_C(B)") ||
        expect_equal(r, "tower_ii_centralizer_center", s.cba.term(alpha), s.zb.term(alpha),
                     "C^a_B(A) and Z_a(B)") ||
        expect_equal(r, "tower_ii_center_restriction", s.zb.term(alpha),
                     s.zc.term(alpha).intersect(b), "Z_a(B) and Z_a(C) meet B")) {
      return;
    }
  }
  r.parameters.erase("alpha");
  auto next = lambda.successor();
  expect_equal(r, "tower_iii_successor", s.cba.term(next), s.cca.term(next).intersect(b),
               "C^(l+1)_B(A) and C^(l+1)_C(A) meet B");
}

// The towers H <= E_(k+1) <= E_k over the lambda range, one report.
CheckReport tower_restriction_on_envelopes(Context& ctx) {
  auto r = base_report(check_id::kTowerRestriction, ctx.h());
  auto lambdas = ctx.lambda_range();
  nlohmann::json tested = nlohmann::json::array();
  for (auto lambda : lambdas) {
    CheckReport one = r;
    tower_restriction_into(one, ctx.envelope(lambda), ctx.envelope(lambda.successor()), ctx.h(), lambda);
    if (one.verdict == Verdict::Fail) {
      one.parameters["tower"] = "envelopes";
      return one;
    }
    if (one.verdict == Verdict::Skipped) {
      // The hypothesis is itself a checked statement for envelope towers.
      one.verdict = Verdict::Fail;
      one.parameters["relation"] = "tower_hypothesis";
      one.parameters["tower"] = "envelopes";
      one.witness = r.subgroup_generators;
      one.reason = "hypothesis unexpectedly fails: " + one.reason;
      return one;
    }
    tested.push_back(lambda.to_string());
  }
  r.parameters["lambdas"] = std::move(tested);
  r.parameters["tower"] = "envelopes";
  return r;
}

void agreement_into(CheckReport& r, Context& ctx, SmallOrdinal lambda) {
  r.parameters["lambda"] = lambda.to_string();
  const auto& cen = ctx.inner_centralizers(lambda);
  const auto& z = ctx.envelope_centers(lambda);
  for (auto alpha : indices_upto(lambda, {&cen, &z})) {
    if (expect_equal(r, "agreement", cen.term(alpha), z.term(alpha),
                     "C^a inside E_l and Z_a(E_l)")) {
      r.parameters["alpha"] = alpha.to_string();
      return;
    }
  }
}

CheckReport centralizer_center_agreement(Context& ctx, SmallOrdinal lambda) {
  auto r = base_report(check_id::kCentralizerCenterAgreement, ctx.h());
  agreement_into(r, ctx, lambda);
  return r;
}

void note_degree(CheckReport& r) { r.parameters["hypercentral_degree"] = "nilpotency class"; }

bool nilpotent_premise(CheckReport& r, Context& ctx, bool allow_trivial) {
  auto c = ctx.h_class();
  if (!c) {
    skip(r, "nilpotent", "H is not nilpotent");
    return false;
  }
  r.parameters["class"] = *c;
  if (*c == 0 && !allow_trivial) {
    skip(r, "nontrivial", "H is trivial (class 0)");
    return false;
  }
  return true;
}

CheckReport envelope_nilpotency(Context& ctx) {
  auto r = base_report(check_id::kEnvelopeNilpotency, ctx.h());
  note_degree(r);
  if (!nilpotent_premise(r, ctx, false)) return r;
  auto c = *ctx.h_class();
  for (std::uint64_t k : {c, c + 1}) {
    const auto& e = ctx.envelope(k);
    auto series = upper_central_series(e, kOmega);
    r.parameters["index"] = k;
    if (expect_subset(r, "envelope_class_bound", e, series.chain.term(c),
                      "E_" + std::to_string(k) + " is not inside Z_c(E_" + std::to_string(k) + ")")) {
      return r;
    }
    if (k == c && series.nilpotency_class && *series.nilpotency_class < c) {
      fail(r, "envelope_class_drop", "E_c has class below c", r.subgroup_generators);
      return r;
    }
  }
  r.parameters.erase("index");
  return r;
}

// E_0 .. E_n by repeated envelope_step.
std::vector<Subgroup> stepped_envelopes(const Subgroup& whole, const Subgroup& h, std::uint64_t n) {
  std::vector<Subgroup> out{whole};
  for (std::uint64_t j = 1; j <= n; ++j) out.push_back(envelope_step(out.back(), h, j));
  return out;
}

CheckReport envelope_stabilization(Context& ctx, std::uint32_t probe_depth) {
  auto r = base_report(check_id::kEnvelopeStabilization, ctx.h());
  r.parameters["probe_depth"] = probe_depth;
  if (!nilpotent_premise(r, ctx, false)) return r;
  auto c = *ctx.h_class();
  auto stepped = stepped_envelopes(ctx.whole(), ctx.h(), c + probe_depth);
  for (std::uint64_t j = c; j <= c + probe_depth; ++j) {
    r.parameters["index"] = j;
    if (expect_equal(r, "stabilization", stepped[j], stepped[c], "E_j and E_c")) return r;
  }
  r.parameters["index"] = "w";
  if (expect_equal(r, "stabilization", ctx.envelope(kOmega), stepped[c], "E_w and E_c")) return r;
  r.parameters.erase("index");
  return r;
}

CheckReport envelope_solvable(Context& ctx) {
  auto r = base_report(check_id::kEnvelopeSolvable, ctx.h());
  if (!nilpotent_premise(r, ctx, true)) return r;
  auto c = *ctx.h_class();
  auto series = derived_series(ctx.envelope(c + 1));
  if (!series.solvable) {
    auto gens = small_generating_set(series.terms.back());
    fail(r, "perfect_term", "the derived series of E_(c+1) stops at a nontrivial perfect subgroup",
         labels_of(ctx.group(), gens));
  }
  return r;
}

void chain_shape_into(CheckReport& r, const Subgroup& h, const ChainRecord& env, const ChainRecord& cen) {
  const auto& g = h.group();
  auto monotone = [&](const ChainRecord& chain, const char* name) {
    const auto& terms = chain.terms();
    bool ascending = chain.direction() == ChainDirection::Ascending;
    for (std::size_t i = 1; i < terms.size(); ++i) {
      const auto& small = ascending ? terms[i - 1].subgroup : terms[i].subgroup;
      const auto& big = ascending ? terms[i].subgroup : terms[i - 1].subgroup;
      if (auto x = outside(small, big)) {
        r.parameters["chain"] = name;
        r.parameters["from"] = terms[i - 1].index.to_string();
        r.parameters["to"] = terms[i].index.to_string();
        fail(r, "monotone", std::string(name) + " chain is not monotone", {g.label(*x)});
        return false;
      }
    }
    return true;
  };
  auto limits = [&](const ChainRecord& chain, const char* name) {
    const auto& terms = chain.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (!terms[i].index.is_limit()) continue;
      std::vector<ElementId> acc;
      Subgroup meet = Subgroup::whole(h.parent());
      for (std::size_t j = 0; j < i; ++j) {
        acc.insert(acc.end(), terms[j].subgroup.members().begin(), terms[j].subgroup.members().end());
        meet = meet.intersect(terms[j].subgroup);
      }
      Subgroup expected = chain.direction() == ChainDirection::Ascending
                              ? Subgroup(h.parent(), std::move(acc))
                              : meet;
      if (auto x = symmetric_difference(terms[i].subgroup, expected)) {
        r.parameters["chain"] = name;
        r.parameters["index"] = terms[i].index.to_string();
        fail(r, "limit_term", std::string(name) + " limit term is not the union/intersection below it",
             {g.label(*x)});
        return false;
      }
    }
    return true;
  };
  if (!monotone(env, "envelope") || !monotone(cen, "centralizer")) return;
  if (!limits(env, "envelope") || !limits(cen, "centralizer")) return;
  for (const auto& t : env.terms()) {
    if (auto x = outside(h, t.subgroup)) {
      r.parameters["index"] = t.index.to_string();
      fail(r, "contains_h", "an envelope term does not contain H", {g.label(*x)});
      return;
    }
  }
  for (const auto& [x, idx] : cen.first_entry()) {
    if (!idx.is_successor()) {
      r.parameters["index"] = idx.to_string();
      fail(r, "first_entry_successor", "an element first enters at a non-successor index",
           {g.label(x)});
      return;
    }
  }
}

CheckReport chain_shape(Context& ctx) {
  auto r = base_report(check_id::kChainShape, ctx.h());
  chain_shape_into(r, ctx.h(), ctx.envelopes(), ctx.centralizers());
  return r;
}

const Subgroup& hypercenter_of_envelope(Context& ctx, SmallOrdinal alpha) {
  return ctx.envelope_centers(alpha).term(alpha);
}

CheckReport hypercenter_relation(Context& ctx, bool ascent) {
  auto r = base_report(ascent ? check_id::kHypercenterAscent : check_id::kHypercenterContainment, ctx.h());
  auto range = ctx.lambda_range();
  for (std::size_t i = 0; i < range.size(); ++i) {
    for (std::size_t j = i; j < range.size(); ++j) {
      auto alpha = range[i], lambda = range[j];
      const auto& lhs = hypercenter_of_envelope(ctx, alpha);
      const auto& rhs = ascent ? hypercenter_of_envelope(ctx, lambda) : ctx.envelope(lambda);
      r.parameters["alpha"] = alpha.to_string();
      r.parameters["lambda"] = lambda.to_string();
      if (expect_subset(r, ascent ? "ascent" : "containment", lhs, rhs,
                        ascent ? "Z_a(E_a) is not inside Z_l(E_l)" : "Z_a(E_a) is not inside E_l")) {
        return r;
      }
    }
  }
  r.parameters.erase("alpha");
  r.parameters.erase("lambda");
  nlohmann::json tested = nlohmann::json::array();
  for (auto l : range) tested.push_back(l.to_string());
  r.parameters["lambdas"] = std::move(tested);
  return r;
}

SmallOrdinal param_ordinal(const nlohmann::json& params, const char* key) {
  const auto& v = params.at(key);
  if (v.is_number()) return SmallOrdinal(v.get<std::uint64_t>());
  return SmallOrdinal::parse(v.get<std::string>());
}

bool witness_in_exactly_one(const GroupPtr& g, const CheckReport& rep, const Subgroup& a, const Subgroup& b) {
  if (rep.witness.empty()) return false;
  auto x = element(g, rep.witness[0]);
  return a.contains(x) != b.contains(x);
}

bool witness_outside(const GroupPtr& g, const CheckReport& rep, const Subgroup& lhs, const Subgroup& rhs) {
  if (rep.witness.empty()) return false;
  auto x = element(g, rep.witness[0]);
  return lhs.contains(x) && !rhs.contains(x);
}

const ChainRecord& chain_named(const nlohmann::json& params, const ChainRecord& env, const ChainRecord& cen) {
  return params.at("chain").get<std::string>() == "envelope" ? env : cen;
}

std::size_t term_position(const ChainRecord& chain, SmallOrdinal index) {
  const auto& terms = chain.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].index == index) return i;
  }
  throw Error(ErrorCode::IndexOutOfRange, "no recorded term at " + index.to_string());
}

bool replay_chain_shape(const Subgroup& h, const ChainRecord& env, const ChainRecord& cen,
                        const CheckReport& rep) {
  const auto& g = h.parent();
  const auto& p = rep.parameters;
  auto relation = p.at("relation").get<std::string>();
  if (rep.witness.empty()) return false;
  auto x = element(g, rep.witness[0]);
  if (relation == "monotone") {
    const auto& chain = chain_named(p, env, cen);
    const auto& from = chain.term(param_ordinal(p, "from"));
    const auto& to = chain.term(param_ordinal(p, "to"));
    return chain.direction() == ChainDirection::Ascending ? from.contains(x) && !to.contains(x)
                                                          : to.contains(x) && !from.contains(x);
  }
  if (relation == "limit_term") {
    const auto& chain = chain_named(p, env, cen);
    auto pos = term_position(chain, param_ordinal(p, "index"));
    bool below_asc = false, below_desc = true;
    for (std::size_t j = 0; j < pos; ++j) {
      below_asc = below_asc || chain.terms()[j].subgroup.contains(x);
      below_desc = below_desc && chain.terms()[j].subgroup.contains(x);
    }
    bool expected = chain.direction() == ChainDirection::Ascending ? below_asc : below_desc;
    return chain.terms()[pos].subgroup.contains(x) != expected;
  }
  if (relation == "contains_h") {
    return h.contains(x) && !env.term(param_ordinal(p, "index")).contains(x);
  }
  if (relation == "first_entry_successor") {
    auto it = cen.first_entry().find(x);
    return it != cen.first_entry().end() && !it->second.is_successor();
  }
  return false;
}

}  // namespace

// ---- public entry points ----------------------------------------------------

CheckReport check_double_centralizer_abelian(const Subgroup& h) {
  Context ctx(h);
  return double_centralizer_abelian(ctx);
}

CheckReport check_tower_restriction(const Subgroup& c, const Subgroup& b, const Subgroup& a,
                                    SmallOrdinal lambda) {
  auto r = base_report(check_id::kTowerRestriction, a);
  r.parameters["tower"] = "explicit";
  r.parameters["ambient_generators"] = generator_labels(c);
  r.parameters["middle_generators"] = generator_labels(b);
  tower_restriction_into(r, c, b, a, lambda);
  return r;
}

CheckReport check_centralizer_center_agreement(const Subgroup& h, SmallOrdinal lambda) {
  Context ctx(h);
  return centralizer_center_agreement(ctx, lambda);
}

CheckReport check_envelope_nilpotency(const Subgroup& h) {
  Context ctx(h);
  return envelope_nilpotency(ctx);
}

CheckReport check_envelope_stabilization(const Subgroup& h, std::uint32_t probe_depth) {
  Context ctx(h);
  return envelope_stabilization(ctx, probe_depth);
}

CheckReport check_envelope_solvable(const Subgroup& h) {
  Context ctx(h);
  return envelope_solvable(ctx);
}

CheckReport check_chain_shape(const Subgroup& h) {
  Context ctx(h);
  return chain_shape(ctx);
}

CheckReport check_chain_shape(const Subgroup& h, const ChainRecord& envelopes,
                              const ChainRecord& centralizers) {
  auto r = base_report(check_id::kChainShape, h);
  chain_shape_into(r, h, envelopes, centralizers);
  return r;
}

CheckReport check_hypercenter_containment(const Subgroup& h) {
  Context ctx(h);
  return hypercenter_relation(ctx, false);
}

CheckReport check_hypercenter_ascent(const Subgroup& h) {
  Context ctx(h);
  return hypercenter_relation(ctx, true);
}

bool replay_witness(const Subgroup& h, const ChainRecord& envelopes, const ChainRecord& centralizers,
                    const CheckReport& report) {
  if (report.verdict != Verdict::Fail || report.check_id != check_id::kChainShape) return false;
  return replay_chain_shape(h, envelopes, centralizers, report);
}

bool replay_witness(const Subgroup& h, const CheckReport& report) {
  if (report.verdict != Verdict::Fail) return false;
  const auto& g = h.parent();
  const auto& p = report.parameters;
  const auto relation = p.value("relation", std::string());
  Context ctx(h);
  try {
    if (relation == "noncommuting_pair") {
      if (report.witness.size() != 2) return false;
      auto dc = centralizer_of(ctx.whole(), centralizer_of(ctx.whole(), h));
      auto x = element(g, report.witness[0]);
      auto y = element(g, report.witness[1]);
      return is_abelian(h) && dc.contains(x) && dc.contains(y) && !g->commute(x, y);
    }
    if (relation.rfind("tower_", 0) == 0) {
      auto lambda = param_ordinal(p, "lambda");
      Subgroup c = Subgroup::whole(g), b = c;
      if (p.value("tower", std::string()) == "envelopes") {
        c = ctx.envelope(lambda);
        b = ctx.envelope(lambda.successor());
      } else {
        c = subgroup_from_labels(g, p.at("ambient_generators").get<std::vector<std::string>>());
        b = subgroup_from_labels(g, p.at("middle_generators").get<std::vector<std::string>>());
      }
      if (relation == "tower_hypothesis") {
        CheckReport again;
        tower_restriction_into(again, c, b, h, lambda);
        return again.verdict == Verdict::Skipped;
      }
      auto s = tower_sides(c, b, h, lambda);
      if (relation == "tower_iii_successor") {
        auto next = lambda.successor();
        return witness_in_exactly_one(g, report, s.cba.term(next), s.cca.term(next).intersect(b));
      }
      auto alpha = param_ordinal(p, "alpha");
      if (relation == "tower_i_centralizers") {
        return witness_in_exactly_one(g, report, s.cca.term(alpha), s.ccb.term(alpha));
      }
      if (relation == "tower_ii_centralizer_center") {
        return witness_in_exactly_one(g, report, s.cba.term(alpha), s.zb.term(alpha));
      }
      if (relation == "tower_ii_center_restriction") {
        return witness_in_exactly_one(g, report, s.zb.term(alpha), s.zc.term(alpha).intersect(b));
      }
      return false;
    }
    if (relation == "agreement") {
      auto lambda = param_ordinal(p, "lambda");
      auto alpha = param_ordinal(p, "alpha");
      return witness_in_exactly_one(g, report, ctx.inner_centralizers(lambda).term(alpha),
                                    ctx.envelope_centers(lambda).term(alpha));
    }
    if (relation == "envelope_class_bound") {
      auto c = p.at("class").get<std::uint64_t>();
      auto k = p.at("index").get<std::uint64_t>();
      const auto& e = ctx.envelope(k);
      return witness_outside(g, report, e, upper_central_series(e, kOmega).chain.term(c));
    }
    if (relation == "envelope_class_drop") {
      auto c = p.at("class").get<std::uint64_t>();
      auto cls = nilpotency_class(ctx.envelope(c));
      return cls && *cls < c;
    }
    if (relation == "stabilization") {
      auto c = p.at("class").get<std::uint64_t>();
      auto j = param_ordinal(p, "index");
      auto depth = j.is_finite() ? j.finite_part() : c;
      auto stepped = stepped_envelopes(ctx.whole(), h, std::max<std::uint64_t>(depth, c));
      const auto& lhs = j.is_finite() ? stepped[j.finite_part()] : ctx.envelope(kOmega);
      return witness_in_exactly_one(g, report, lhs, stepped[c]);
    }
    if (relation == "perfect_term") {
      auto c = p.at("class").get<std::uint64_t>();
      auto series = derived_series(ctx.envelope(c + 1));
      if (series.solvable || report.witness.empty()) return false;
      for (const auto& l : report.witness) {
        if (!series.terms.back().contains(element(g, l))) return false;
      }
      return true;
    }
    if (relation == "containment" || relation == "ascent") {
      auto alpha = param_ordinal(p, "alpha");
      auto lambda = param_ordinal(p, "lambda");
      const auto& lhs = hypercenter_of_envelope(ctx, alpha);
      const auto& rhs = relation == "ascent" ? hypercenter_of_envelope(ctx, lambda) : ctx.envelope(lambda);
      return witness_outside(g, report, lhs, rhs);
    }
    if (report.check_id == check_id::kChainShape) {
      return replay_chain_shape(h, ctx.envelopes(), ctx.centralizers(), report);
    }
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  return false;
}

bool replay_skip(const Subgroup& h, const CheckReport& report) {
  if (report.verdict != Verdict::Skipped) return false;
  auto unmet = report.parameters.value("unmet", std::string());
  if (unmet == "abelian") return !is_abelian(h);
  if (unmet == "nilpotent") return !nilpotency_class(h).has_value();
  if (unmet == "nontrivial") return h.is_trivial();
  if (unmet == "tower" || unmet == "hypothesis") {
    const auto& g = h.parent();
    const auto& p = report.parameters;
    auto c = subgroup_from_labels(g, p.at("ambient_generators").get<std::vector<std::string>>());
    auto b = subgroup_from_labels(g, p.at("middle_generators").get<std::vector<std::string>>());
    if (unmet == "tower") return !h.is_subset_of(b) || !b.is_subset_of(c);
    auto alpha = param_ordinal(p, "alpha");
    return !(iterated_centralizer_chain(c, h, alpha).term(alpha) ==
             upper_central_series(c, alpha).chain.term(alpha));
  }
  return false;
}

std::vector<CheckReport> run_checks(const std::string& group_name, const Subgroup& h,
                                    const SweepOptions& options) {
  const auto& wanted = options.checks.empty() ? all_check_ids() : options.checks;
  Context ctx(h);
  std::vector<CheckReport> out;
  for (const auto& id : all_check_ids()) {
    if (std::find(wanted.begin(), wanted.end(), id) == wanted.end()) continue;
    std::vector<std::function<CheckReport()>> runs;
    if (id == check_id::kDoubleCentralizerAbelian) {
      runs.emplace_back([&] { return double_centralizer_abelian(ctx); });
    } else if (id == check_id::kTowerRestriction) {
      runs.emplace_back([&] { return tower_restriction_on_envelopes(ctx); });
    } else if (id == check_id::kCentralizerCenterAgreement) {
      std::vector<SmallOrdinal> lambdas;
      try {
        lambdas = ctx.lambda_range();
      } catch (const Error&) {
        lambdas = {0};
      }
      for (auto lambda : lambdas) {
        runs.emplace_back([&ctx, lambda] { return centralizer_center_agreement(ctx, lambda); });
      }
    } else if (id == check_id::kEnvelopeNilpotency) {
      runs.emplace_back([&] { return envelope_nilpotency(ctx); });
    } else if (id == check_id::kEnvelopeStabilization) {
      runs.emplace_back([&] { return envelope_stabilization(ctx, options.probe_depth); });
    } else if (id == check_id::kEnvelopeSolvable) {
      runs.emplace_back([&] { return envelope_solvable(ctx); });
    } else if (id == check_id::kChainShape) {
      runs.emplace_back([&] { return chain_shape(ctx); });
    } else if (id == check_id::kHypercenterContainment) {
      runs.emplace_back([&] { return hypercenter_relation(ctx, false); });
    } else if (id == check_id::kHypercenterAscent) {
      runs.emplace_back([&] { return hypercenter_relation(ctx, true); });
    }
    for (auto& run : runs) {
      auto start = std::chrono::steady_clock::now();
      CheckReport r;
      try {
        r = run();
      } catch (const std::exception& e) {
        r = base_report(id.c_str(), h);
        r.verdict = Verdict::Error;
        r.reason = e.what();
      }
      r.group_name = group_name;
      r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace envelope
