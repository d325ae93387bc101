#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "horace/hankel.hpp"
#include "horace/limits.hpp"
#include "horace/monomial_limits.hpp"
#include "horace/oracle.hpp"
#include "horace/parse.hpp"
#include "horace/pipeline.hpp"
#include "horace/staircase.hpp"

using json = nlohmann::ordered_json;
using namespace horace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUndecided = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitUsage = 64;
constexpr int kExitComputation = 70;

std::vector<long> parse_csv_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::vector<YVar> parse_ys(const std::string& s) {
  std::vector<YVar> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "x")
      out.push_back(YVar::X);
    else if (item == "y")
      out.push_back(YVar::Y);
    else
      throw std::invalid_argument("directions must be 'x' or 'y'");
  }
  return out;
}

json staircase_json(const Staircase& e) {
  json j = json::array();
  for (long v : e.lengths()) j.push_back(v);
  return j;
}

json cert_json(const StepCertificate& c) {
  json j;
  switch (c.kind) {
    case StepKind::Step: j["kind"] = "step"; break;
    case StepKind::TrivStep: j["kind"] = "trivstep"; break;
    case StepKind::Height2: j["kind"] = "height2"; break;
    case StepKind::KStep: j["kind"] = "kstep"; break;
  }
  j["c_before"] = c.before.c;
  j["r_before"] = c.before.r;
  j["E_before"] = c.before.E.to_string();
  j["mu"] = c.mu;
  j["tr"] = c.tr;
  j["s"] = c.s;
  j["c_after"] = c.after.c;
  j["r_after"] = c.after.r;
  j["E_after"] = c.after.E.to_string();
  j["colength_identity"] = c.colength_identity;
  j["sandwich"] = c.sandwich;
  j["length_drop"] = c.length_drop;
  j["min_step_drop"] = c.min_step_drop;
  j["top_stair_guard"] = c.top_stair_guard;
  j["top_stair"] = c.top_stair;
  j["traces_increasing"] = c.traces_increasing;
  j["next_consistent"] = c.next_consistent;
  return j;
}

json report_json(const RankReport& r) {
  json j;
  j["d"] = r.d;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["rank"] = r.rank;
  j["kernel"] = r.kernel;
  j["verdict"] = r.regular ? "regular" : "special-at-sample";
  j["seeds_tried"] = r.seeds_tried;
  return j;
}

json levels_json(const LimitResult& res) {
  json j;
  j["res0"] = res.res0;
  json lv = json::array();
  for (const auto& l : res.levels) {
    json e;
    e["tr"] = l.tr;
    e["res"] = l.res;
    e["hres"] = l.hres;
    e["deficiency"] = l.deficiency;
    lv.push_back(e);
  }
  j["levels"] = lv;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact staircase/limit-ideal toolkit"};
  app.require_subcommand(1);

  // ---- staircase ----
  auto* sc = app.add_subcommand("staircase", "staircase combinatorics");
  sc->require_subcommand(1);
  auto* sc_info = sc->add_subcommand("info", "basic invariants");
  std::string sc_lengths;
  sc_info->add_option("--lengths", sc_lengths, "comma separated stair lengths")
      ->required();

  // ---- limits ----
  auto* lm = app.add_subcommand("limits", "trace/residual engine");
  lm->require_subcommand(1);
  std::string lm_ideal, lm_ys, lm_ps;
  unsigned long long lm_prime = kDefaultPrime;
  for (const char* name : {"qsearch", "run", "deficiency"}) {
    auto* cmd = lm->add_subcommand(name);
    cmd->add_option("--ideal", lm_ideal, "ideal expression")->required();
    cmd->add_option("--ys", lm_ys, "directions, e.g. y,y,x")->required();
    cmd->add_option("--ps", lm_ps, "truncation orders, e.g. 8,7")->required();
    cmd->add_option("--prime", lm_prime, "field modulus");
  }

  // ---- stcres ----
  auto* st = app.add_subcommand("stcres", "staircase residual planner");
  st->require_subcommand(1);
  std::string st_lengths, st_tr, st_m;
  for (const char* name : {"plan", "verify"}) {
    auto* cmd = st->add_subcommand(name);
    cmd->add_option("--lengths", st_lengths)->required();
    cmd->add_option("--tr", st_tr)->required();
    cmd->add_option("--m", st_m)->required();
  }

  // ---- hankel ----
  auto* hk = app.add_subcommand("hankel", "binomial Hankel determinants");
  hk->require_subcommand(1);
  long hk_e = 0, hk_r = 0, hk_n = 0, hk_emax = 0, hk_p = 0, hk_i = 0;
  auto* hk_det = hk->add_subcommand("det");
  hk_det->add_option("--e", hk_e)->required();
  hk_det->add_option("--r", hk_r)->required();
  hk_det->add_option("--n", hk_n)->required();
  auto* hk_sweep = hk->add_subcommand("sweep");
  hk_sweep->add_option("--emax", hk_emax)->required();
  auto* hk_eq2 = hk->add_subcommand("eq2");
  hk_eq2->add_option("--e", hk_e)->required();
  hk_eq2->add_option("--p", hk_p)->required();
  hk_eq2->add_option("--i", hk_i)->required();
  hk_eq2->add_option("--r", hk_r)->required();

  // ---- decide ----
  auto* dc = app.add_subcommand("decide", "regularity decision pipeline");
  long dc_n = 0, dc_e = 0;
  dc->add_option("--n", dc_n)->required();
  dc->add_option("--e", dc_e)->required();

  // ---- oracle ----
  auto* oc = app.add_subcommand("oracle", "interpolation rank oracle");
  long oc_n = 0, oc_e = 0, oc_d = 0, oc_dmax = -1;
  unsigned long long oc_prime = kDefaultPrime, oc_seed = 0;
  oc->add_option("--n", oc_n)->required();
  oc->add_option("--e", oc_e)->required();
  oc->add_option("--d", oc_d)->required();
  oc->add_option("--dmax", oc_dmax, "sweep up to this degree");
  oc->add_option("--prime", oc_prime);
  oc->add_option("--seed", oc_seed);

  // ---- verify ----
  auto* vf = app.add_subcommand("verify", "built-in cross-check suite");

  // --json accepted (and default) everywhere
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  for (auto* s : {sc, lm, st, hk, dc, oc, vf})
    s->add_flag("--json", json_flag, "JSON output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sc_info->parsed()) {
      Staircase e = Staircase::parse(sc_lengths);
      json j;
      j["colength"] = e.colength();
      j["h"] = e.height();
      j["gentle"] = e.gentle();
      std::cout << j.dump() << "\n";
      return kExitOk;
    }

    if (lm->parsed()) {
      std::vector<UPoly> gens = parse_ideal(lm_ideal);
      std::vector<YVar> ys = parse_ys(lm_ys);
      std::vector<long> psl = parse_csv_longs(lm_ps);
      std::vector<int> ps(psl.begin(), psl.end());
      EngineInput in = make_engine_input(gens, ps, lm_prime);
      json j;
      if (lm->get_subcommand("qsearch")->parsed()) {
        j["q"] = max_safe_p_checked(in, ys, ps);
      } else if (lm->get_subcommand("run")->parsed()) {
        LimitResult res = run_plan_checked(in, LimitPlan{ys, ps});
        j = levels_json(res);
      } else {
        DeficiencyReport rep = deficiency_checked(in, LimitPlan{ys, ps});
        j["direct"] = rep.direct;
        j["claim1"] = rep.claim1;
        j["claim2"] = rep.claim2;
      }
      std::cout << j.dump() << "\n";
      return kExitOk;
    }

    if (st->parsed()) {
      Staircase e = Staircase::parse(st_lengths);
      std::vector<long> tr = parse_csv_longs(st_tr);
      std::vector<long> m = parse_csv_longs(st_m);
      try {
        json j;
        if (st->get_subcommand("plan")->parsed()) {
          StcresPlan plan = stcres_plan(e, tr, m);
          j["p"] = plan.ps;
          j["traces"] = plan.expected_tr;
          j["E_prime"] = plan.e_prime.to_string();
        } else {
          StcresVerification v = verify_stcres(e, tr, m);
          j["ok"] = v.ok;
          j["detail"] = v.detail;
          j["p"] = v.plan.ps;
          j["traces"] = v.plan.expected_tr;
          j["E_prime"] = v.plan.e_prime.to_string();
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
      } catch (const HypothesisFailure& hf) {
        json j;
        j["hypothesis"] = hf.index;
        j["detail"] = hf.what();
        std::cout << j.dump() << "\n";
        return kExitHypothesis;
      }
    }

    if (hk->parsed()) {
      if (hk_det->parsed()) {
        json j;
        j["det"] = hankel_det(hk_e, hk_r, hk_n).get_str();
        std::cout << j.dump() << "\n";
      } else if (hk_eq2->parsed()) {
        json j;
        j["trivial_only"] = eq2_trivial_solution(hk_e, hk_p, hk_i, hk_r);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "e,r,n,det\n";
        for (const auto& row : hankel_sweep(hk_emax))
          std::cout << row.e << "," << row.r << "," << row.n << ","
                    << row.det.get_str() << "\n";
      }
      return kExitOk;
    }

    if (dc->parsed()) {
      Verdict v = decide_regular(dc_n, dc_e);
      json j;
      j["n"] = dc_n;
      j["e"] = dc_e;
      j["status"] = v.status == VerdictStatus::Regular ? "regular"
                    : v.status == VerdictStatus::Undecided
                        ? "undecided"
                        : "hypothesis-failure";
      json chain = json::array();
      for (const auto& c : v.chain) chain.push_back(cert_json(c));
      j["chain"] = chain;
      if (v.status != VerdictStatus::HypothesisFailure) {
        j["final_c"] = v.final_type.c;
        j["final_r"] = v.final_type.r;
        j["final_E"] = v.final_type.E.to_string();
        j["regheight2"] = v.regheight2;
        j["bottom"] = v.bottom;
        j["goal2_chain"] = v.goal2_chain;
      }
      j["detail"] = v.detail;
      std::cout << j.dump() << "\n";
      if (v.status == VerdictStatus::Regular) return kExitOk;
      return v.status == VerdictStatus::Undecided ? kExitUndecided
                                                  : kExitHypothesis;
    }

    if (oc->parsed()) {
      if (oc_dmax >= 0) {
        std::cout << "d,rows,cols,rank,kernel,verdict\n";
        for (const auto& r : oracle_sweep(oc_n, oc_e, oc_d, oc_dmax, oc_prime,
                                          oc_seed))
          std::cout << r.d << "," << r.rows << "," << r.cols << "," << r.rank
                    << "," << r.kernel << ","
                    << (r.regular ? "regular" : "special-at-sample") << "\n";
      } else {
        RankReport r =
            regularity(InterpProblem{oc_n, oc_e, oc_d, oc_prime, oc_seed});
        std::cout << report_json(r).dump() << "\n";
      }
      return kExitOk;
    }

    if (vf->parsed()) {
      json j;
      bool ok = true;

      bool hankel_ok = true;
      for (const auto& row : hankel_sweep(8)) hankel_ok &= row.det != 0;
      j["hankel_sweep_e8"] = hankel_ok;
      ok &= hankel_ok;

      std::vector<UPoly> gens = parse_ideal("(x+y+t,x^2)^4");
      std::vector<int> ps{8, 7};
      EngineInput in = make_engine_input(gens, ps);
      int q = max_safe_p_checked(in, {YVar::Y, YVar::Y, YVar::X}, ps);
      j["qsearch_golden"] = q;
      ok &= q == 5;

      StcresVerification sv =
          verify_stcres(Staircase::parse("8,5,2"), {1, 2}, {2, 2});
      j["stcres_small"] = sv.ok;
      ok &= sv.ok;

      Verdict v = decide_regular(36, 3);
      bool dec_ok = v.status == VerdictStatus::Regular;
      UnloadingReport ur = unloading_check(Staircase::e1(36, 3), 1, 3);
      j["decide_36_3"] = dec_ok;
      j["unloading_36_3"] = ur.all_ok;
      ok &= dec_ok && ur.all_ok;

      bool oracle_ok = true;
      for (const auto& r : oracle_sweep(16, 2, 5, 10)) oracle_ok &= r.regular;
      j["oracle_16_2"] = oracle_ok;
      ok &= oracle_ok;

      j["ok"] = ok;
      std::cout << j.dump() << "\n";
      return ok ? kExitOk : kExitComputation;
    }
  } catch (const HypothesisFailure& e) {
    json j;
    j["error"] = e.what();
    j["hypothesis"] = e.index;
    std::cout << j.dump() << "\n";
    return kExitHypothesis;
  } catch (const PipelineHypothesisFailure& e) {
    json j;
    j["error"] = e.what();
    std::cout << j.dump() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    json j;
    j["error"] = e.what();
    std::cout << j.dump() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
