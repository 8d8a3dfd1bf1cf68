#include <chrono>
#include <iomanip>
#include <sstream>

#include "envelope/casestudy.hpp"
#include "envelope/error.hpp"

namespace envelope {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const char* kGroupName = "monomial GL2 over dyadic roots";

class Audit {
 public:
  explicit Audit(const CaseStudyOptions& o)
      : opt_(o),
        h_(h_infinity(HReading::WithSwap)),
        env_(MonomialSubgroup::monomial(), h_),
        cen_(MonomialSubgroup::monomial(), h_) {}

  CaseStudyResult run() {
    if (opt_.samples == 0) throw Error(ErrorCode::InvalidArgument, "the audit needs at least one sample");
    auto timed = [&](auto&& fn) {
      auto start = std::chrono::steady_clock::now();
      std::size_t before = reports_.size();
      try {
        fn();
      } catch (const std::exception& e) {
        auto& r = report("audit_error");
        r.verdict = Verdict::Error;
        r.reason = e.what();
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      for (std::size_t i = before; i < reports_.size(); ++i) {
        reports_[i].runtime_ms = ms / static_cast<double>(reports_.size() - before);
      }
    };
    timed([&] { claim_agreement(); });
    timed([&] { successor_collapse(); });
    timed([&] { dyadic_ratio_form(); });
    timed([&] { descent(); });
    timed([&] { closure(); });
    timed([&] { transfinite_agreement(); });
    timed([&] { first_entry(); });
    timed([&] { solvable(); });
    timed([&] { not_nilpotent(); });
    timed([&] { hypercentral_degree(); });
    timed([&] { diagonal_only_reading(); });
    timed([&] { generator_reduction(); });
    return {std::move(reports_), table()};
  }

 private:
  CheckReport& report(const std::string& id) {
    CheckReport r;
    r.check_id = id;
    r.group_name = kGroupName;
    r.subgroup_generators = {"diag(z(1/2^n), 1)", "diag(1, z(1/2^n))", "anti(1, 1)"};
    r.parameters["arity"] = opt_.arity;
    reports_.push_back(std::move(r));
    return reports_.back();
  }

  static void fail(CheckReport& r, std::string reason, std::vector<std::string> witness) {
    r.verdict = Verdict::Fail;
    r.reason = std::move(reason);
    r.witness = std::move(witness);
  }

  ElementSampler sampler(std::uint64_t tag) const { return ElementSampler(mix_seed(opt_.seed, tag), opt_.arity); }

  static std::string in_out(bool b) { return b ? "in" : "out"; }

  // Samples drawn from the claimed subgroup, from the derived subgroup and
  // from the whole ambient, in rotation.
  void claim_agreement() {
    auto claims = claimed_chain();
    for (std::size_t i = 0; i < claims.size(); ++i) {
      const auto& c = claims[i];
      auto derived = env_.at(c.index);
      auto& r = report("claim_agreement");
      r.parameters["ordinal"] = c.index.to_string();
      r.parameters["claimed"] = c.description;
      r.parameters["derived"] = derived.to_string();
      r.parameters["samples"] = opt_.samples;
      if (c.beyond_ambient) r.parameters["compared_inside"] = "monomial ambient";
      if (c.inferred) r.parameters["claim_source"] = "inferred from stabilization at w+1";
      auto s = sampler(100 + i);
      for (std::size_t k = 0; k < opt_.samples; ++k) {
        MonomialElem x = k % 3 == 0 ? c.sample(s) : k % 3 == 1 ? s.member(derived) : s.ambient();
        bool claimed = c.contains(x), got = derived.contains(x);
        if (claimed != got) {
          fail(r, "stated and derived membership differ",
               {x.to_string(), "stated: " + in_out(claimed), "derived: " + in_out(got)});
          break;
        }
      }
      agreement_.push_back(r.verdict == Verdict::Pass);
    }
  }

  void successor_collapse() {
    auto w1 = SmallOrdinal::make(1, 1), w2 = SmallOrdinal::make(1, 2);
    auto a = env_.at(w1), b = env_.at(w2);
    auto& r = report("envelope_successor_collapse");
    r.parameters["lhs"] = "w+1";
    r.parameters["rhs"] = "w+2";
    r.parameters["samples"] = opt_.samples;
    if (!(a == b)) {
      fail(r, "descriptors differ", {a.to_string(), b.to_string()});
      return;
    }
    auto s = sampler(200);
    for (std::size_t k = 0; k < opt_.samples; ++k) {
      auto x = k % 2 ? s.member(a) : s.ambient();
      if (a.contains(x) != b.contains(x)) {
        fail(r, "membership differs", {x.to_string()});
        return;
      }
    }
  }

  void dyadic_ratio_form() {
    auto e = env_.at(SmallOrdinal::make(1, 1));
    auto& r = report("dyadic_ratio_form");
    r.parameters["ordinal"] = "w+1";
    r.parameters["form"] = "diag(x, x z), z a 2^n-th root of 1";
    auto s = sampler(300);
    std::size_t members = 0;
    std::uint32_t deepest = 0;
    for (std::size_t k = 0; k < opt_.samples; ++k) {
      auto x = k % 2 ? s.member(e) : s.ambient();
      if (!e.contains(x)) continue;
      ++members;
      auto z = x.b / x.a;
      if (!z.is_torsion()) {
        fail(r, "a member's diagonal ratio is not a root of unity", {x.to_string()});
        return;
      }
      // b = a z must hold exactly.
      if (!(x.a * z == x.b)) {
        fail(r, "ratio reconstruction failed", {x.to_string()});
        return;
      }
      deepest = std::max(deepest, z.root().log2_denominator());
    }
    r.parameters["members_checked"] = members;
    r.parameters["deepest_root_log2"] = deepest;
  }

  std::vector<SmallOrdinal> ordinals() const {
    return {0, 1, 2, 3, SmallOrdinal::omega(), SmallOrdinal::make(1, 1), SmallOrdinal::make(1, 2)};
  }

  void descent() {
    auto& r = report("descent");
    auto idx = ordinals();
    auto s = sampler(400);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      auto e = env_.at(idx[i]);
      if (!h_.is_subset_of(e)) {
        fail(r, "H is not inside E_" + idx[i].to_string(), {e.to_string()});
        return;
      }
      for (std::size_t k = 0; k < opt_.samples / 10 + 1; ++k) {
        auto x = s.member(h_);
        if (!e.contains(x)) {
          fail(r, "a member of H is outside E_" + idx[i].to_string(), {x.to_string()});
          return;
        }
      }
      for (std::size_t j = 0; j < i; ++j) {
        auto bigger = env_.at(idx[j]);
        for (std::size_t k = 0; k < opt_.samples / 10 + 1; ++k) {
          auto x = k % 2 ? s.member(e) : s.ambient();
          if (e.contains(x) && !bigger.contains(x)) {
            r.parameters["alpha"] = idx[i].to_string();
            r.parameters["beta"] = idx[j].to_string();
            fail(r, "E_alpha is not inside E_beta", {x.to_string()});
            return;
          }
        }
      }
    }
  }

  void closure() {
    struct Named {
      std::string name;
      std::function<bool(const MonomialElem&)> contains;
      std::function<MonomialElem(ElementSampler&)> sample;
    };
    std::vector<Named> preds;
    auto from = [&](const std::string& name, MonomialSubgroup d) {
      preds.push_back({name, [d](const MonomialElem& x) { return d.contains(x); },
                       [d](ElementSampler& s) { return s.member(d); }});
    };
    from("H_inf", h_);
    from("Diag", MonomialSubgroup::diagonal());
    from("Monomial", MonomialSubgroup::monomial());
    from("Scalars", MonomialSubgroup::scalars());
    for (const auto& c : claimed_chain()) {
      preds.push_back({"ClaimedE(" + c.index.to_string() + ")", c.contains, c.sample});
    }
    for (auto a : ordinals()) {
      from("DerivedC(" + a.to_string() + ")", cen_.at(a));
      from("DerivedE(" + a.to_string() + ")", env_.at(a));
    }
    for (std::size_t p = 0; p < preds.size(); ++p) {
      const auto& pr = preds[p];
      auto& r = report("closure");
      r.parameters["predicate"] = pr.name;
      r.parameters["pairs"] = opt_.closure_pairs;
      auto s = sampler(500 + p);
      for (std::size_t k = 0; k < opt_.closure_pairs; ++k) {
        auto x = pr.sample(s), y = pr.sample(s);
        if (!pr.contains(x) || !pr.contains(y)) {
          fail(r, "sampler produced a non-member", {x.to_string(), y.to_string()});
          break;
        }
        if (!pr.contains(sym_mul(x, y))) {
          fail(r, "not closed under products", {x.to_string(), y.to_string()});
          break;
        }
        if (!pr.contains(sym_inv(x))) {
          fail(r, "not closed under inverses", {x.to_string()});
          break;
        }
      }
    }
  }

  // Least finite n with x in C^n(H) (ambient monomial), up to the limit depth.
  std::optional<std::uint64_t> entry_level(DescriptorSeries& series, const MonomialElem& x) {
    for (std::uint64_t n = 0; n <= kLimitDepth; ++n) {
      if (series.at(n).contains(x)) return n;
    }
    return std::nullopt;
  }

  // C^a inside E_l against Z_a(E_l) for a <= l and l in {w, w+1, w+2}.
  void transfinite_agreement() {
    auto s = sampler(600);
    for (std::uint64_t j = 0; j <= 2; ++j) {
      auto lambda = SmallOrdinal::make(1, j);
      auto e = env_.at(lambda);
      DescriptorSeries c_in(e, h_);
      DescriptorSeries z_in(e, e, true);
      for (auto alpha : ordinals()) {
        if (lambda < alpha) continue;
        auto& r = report("transfinite_agreement");
        r.parameters["lambda"] = lambda.to_string();
        r.parameters["alpha"] = alpha.to_string();
        auto c = c_in.at(alpha), z = z_in.at(alpha);
        r.parameters["derived"] = c.to_string();
        if (!(c == z)) {
          fail(r, "C^alpha inside E_lambda differs from Z_alpha(E_lambda)", {c.to_string(), z.to_string()});
          continue;
        }
        tower_characterization(r, s, e, z_in, c, alpha);
      }
    }
  }

  // Members of Z_k are killed by every depth-k commutator tower with entries
  // from E. For a = w+j, j-fold towers land in Z_w, whose members have a
  // finite entry level n and are killed by depth-n towers.
  void tower_characterization(CheckReport& r, ElementSampler& s, const MonomialSubgroup& e,
                              DescriptorSeries& z_in, const MonomialSubgroup& c, SmallOrdinal alpha) {
    const std::size_t members = opt_.samples / 20 + 1;
    for (std::size_t k = 0; k < members; ++k) {
      auto x = s.member(c);
      std::vector<MonomialElem> lead;
      for (std::uint64_t d = 0; !alpha.is_finite() && d < alpha.finite_part(); ++d) lead.push_back(s.member(e));
      auto t = commutator_tower(x, lead);
      std::uint64_t depth;
      if (alpha.is_finite()) {
        depth = alpha.finite_part();
      } else {
        auto lvl = entry_level(z_in, t);
        if (!lvl) {
          fail(r, "element has no finite entry level", {t.to_string()});
          return;
        }
        depth = *lvl;
      }
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<MonomialElem> ys;
        for (std::uint64_t d = 0; d < depth; ++d) ys.push_back(s.member(e));
        if (!commutator_tower(t, ys).is_identity()) {
          std::vector<std::string> w{x.to_string()};
          for (const auto& y : lead) w.push_back(y.to_string());
          for (const auto& y : ys) w.push_back(y.to_string());
          fail(r, "a commutator tower of the expected depth does not vanish", w);
          return;
        }
      }
    }
  }

  void first_entry() {
    auto& r = report("first_entry_successor");
    r.parameters["ordinal"] = "w";
    auto cw = cen_.at(SmallOrdinal::omega());
    auto s = sampler(700);
    std::uint64_t deepest = 0;
    for (std::size_t k = 0; k < opt_.samples; ++k) {
      auto x = s.member(cw);
      auto lvl = entry_level(cen_, x);
      if (!lvl) {
        fail(r, "a member of C^w enters at no finite level", {x.to_string()});
        return;
      }
      if (*lvl == 0 && !x.is_identity()) {
        fail(r, "a non-identity member enters at 0", {x.to_string()});
        return;
      }
      deepest = std::max(deepest, *lvl);
    }
    r.parameters["deepest_entry"] = deepest;
  }

  void solvable() {
    auto e = env_.at(SmallOrdinal::make(1, 1));
    auto& r = report("solvable");
    r.parameters["ordinal"] = "w+1";
    r.parameters["derived_length_bound"] = 2;
    auto s = sampler(800);
    std::vector<MonomialElem> comms;
    for (std::size_t k = 0; k < opt_.samples; ++k) {
      auto c = sym_commutator(s.member(e), s.member(e));
      if (c.swap) {
        fail(r, "a commutator is not diagonal", {c.to_string()});
        return;
      }
      comms.push_back(c);
    }
    for (std::size_t k = 1; k < comms.size(); ++k) {
      if (!sym_commutator(comms[k - 1], comms[k]).is_identity()) {
        fail(r, "second derived term is not trivial", {comms[k - 1].to_string(), comms[k].to_string()});
        return;
      }
    }
  }

  void not_nilpotent() {
    auto e = env_.at(SmallOrdinal::make(1, 1));
    DescriptorSeries z(e, e, true);
    auto& r = report("not_nilpotent");
    r.parameters["ordinal"] = "w+1";
    r.parameters["depth"] = opt_.nilpotency_depth;
    auto w = MonomialElem::swap_matrix(opt_.arity);
    auto one = SymScalar::one(opt_.arity);
    for (std::uint32_t k = 1; k <= opt_.nilpotency_depth; ++k) {
      auto x = MonomialElem::diag(SymScalar::root_of_unity(DyadicRoot::primitive(k + 1), opt_.arity), one);
      if (!e.contains(x)) {
        fail(r, "witness is not in E_(w+1)", {x.to_string()});
        return;
      }
      // [x, w, ..., w] with k entries is nontrivial, so x is outside Z_k.
      auto tower = commutator_tower(x, std::vector<MonomialElem>(k, w));
      if (tower.is_identity() || z.at(k).contains(x)) {
        r.parameters["k"] = k;
        fail(r, "witness does not escape Z_k", {x.to_string(), tower.to_string()});
        return;
      }
      r.witness.push_back(x.to_string());
    }
  }

  static std::string degree_text(const std::optional<SmallOrdinal>& d) { return d ? d->to_string() : "none"; }

  void hypercentral_degree() {
    auto& r = report("hypercentral_degree");
    auto dh = descriptor_hypercentral_degree(h_);
    auto de = descriptor_hypercentral_degree(env_.at(SmallOrdinal::make(1, 1)));
    auto dp = descriptor_hypercentral_degree(h_infinity(HReading::DiagonalOnly));
    r.parameters["H_inf"] = degree_text(dh);
    r.parameters["E_w+1"] = degree_text(de);
    r.parameters["H_inf_diagonal_only"] = degree_text(dp);
    if (!dh || !dh->is_successor()) {
      fail(r, "H_inf does not have a successor hypercentral degree", {degree_text(dh)});
    } else if (!de || *de != SmallOrdinal::make(1, 1)) {
      fail(r, "E_(w+1) does not have hypercentral degree w+1", {degree_text(de)});
    }
  }

  void diagonal_only_reading() {
    auto diag_only = h_infinity(HReading::DiagonalOnly);
    DescriptorEnvelopes penv(MonomialSubgroup::monomial(), diag_only);
    DescriptorSeries pcen(MonomialSubgroup::monomial(), diag_only);
    for (auto a : ordinals()) diagonal_rows_.push_back(penv.at(a));
    auto e1 = penv.at(1);
    auto& r = report("diagonal_generators_discrepancy");
    r.subgroup_generators = {"diag(z(1/2^n), 1)", "diag(1, z(1/2^n))"};
    r.parameters["derived_E1"] = e1.to_string();
    r.parameters["claimed_E1"] = "GL2(C)";
    r.parameters["discrepancy"] = !(e1 == MonomialSubgroup::monomial());
    // Element-level: c = diag(t1, 1) centralizes the diagonal-only H, and
    // [w, c] != 1, so w fails the defining condition of E_1.
    auto w = MonomialElem::swap_matrix(opt_.arity);
    auto c = MonomialElem::diag(SymScalar::generator(0, opt_.arity), SymScalar::one(opt_.arity));
    auto s = sampler(900);
    bool c_centralizes = pcen.at(1).contains(c);
    for (std::size_t k = 0; k < opt_.samples / 10 + 1; ++k) {
      c_centralizes = c_centralizes && sym_commutator(c, s.member(diag_only)).is_identity();
    }
    auto comm = sym_commutator(w, c);
    bool witness_ok = c_centralizes && !comm.is_identity() && !e1.contains(w);
    r.witness = {w.to_string(), c.to_string(), comm.to_string()};
    r.reason = "with diagonal generators only, E_1 is " + e1.to_string() +
               "; the swap lies in the stated E_1 but not in the derived one";
    if (!witness_ok) {
      r.verdict = Verdict::Fail;
      r.reason = "discrepancy witness does not validate";
    }
  }

  void generator_reduction() {
    std::vector<SmallOrdinal> alphas;
    for (std::uint64_t k = 1; k <= 8; ++k) alphas.emplace_back(k);
    alphas.push_back(SmallOrdinal::make(1, 1));
    alphas.push_back(SmallOrdinal::make(1, 2));
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      auto& r = report("generator_reduction");
      r.subgroup_generators = {"diag(z(1/64), 1)", "diag(1, z(1/64))", "anti(1, 1)"};
      r.parameters["alpha"] = alphas[i].to_string();
      auto res = generator_reduction_crosscheck(alphas[i], opt_.crosscheck_x, opt_.crosscheck_h,
                                                mix_seed(opt_.seed, 1000 + i), opt_.arity);
      r.parameters["trials"] = res.trials;
      r.parameters["disagreements"] = res.disagreements;
      r.parameters["members"] = res.members;
      if (res.disagreements) fail(r, "generator check and direct sampling disagree", res.witness);
    }
  }

  std::string table() {
    std::ostringstream os;
    auto claims = claimed_chain();
    os << std::left << std::setw(6) << "index" << " | " << std::setw(52) << "derived E (H_inf with swap)"
       << " | " << std::setw(58) << "stated" << " | agree\n";
    for (std::size_t i = 0; i < claims.size(); ++i) {
      std::string stated = claims[i].description;
      if (claims[i].beyond_ambient) stated += " (monomial part)";
      if (claims[i].inferred) stated += " (inferred)";
      os << std::setw(6) << claims[i].index.to_string() << " | " << std::setw(52)
         << env_.at(claims[i].index).to_string() << " | " << std::setw(58) << stated << " | "
         << (i < agreement_.size() ? (agreement_[i] ? "yes" : "no") : "?") << '\n';
    }
    os << "\ndiagonal generators only (no swap):\n";
    auto idx = ordinals();
    for (std::size_t i = 0; i < diagonal_rows_.size(); ++i) {
      os << std::setw(6) << idx[i].to_string() << " | " << diagonal_rows_[i].to_string() << '\n';
    }
    return os.str();
  }

  CaseStudyOptions opt_;
  MonomialSubgroup h_;
  DescriptorEnvelopes env_;
  DescriptorSeries cen_;
  std::vector<CheckReport> reports_;
  std::vector<bool> agreement_;
  std::vector<MonomialSubgroup> diagonal_rows_;
};

}  // namespace

CaseStudyResult audit_claimed_chain(const CaseStudyOptions& options) {
  Audit audit(options);
  return audit.run();
}

}  // namespace envelope
