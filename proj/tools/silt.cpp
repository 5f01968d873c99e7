// Command-line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "silt/classify.hpp"
#include "silt/derived.hpp"
#include "silt/endo.hpp"
#include "silt/errors.hpp"
#include "silt/harness.hpp"
#include "silt/homological.hpp"
#include "silt/io.hpp"
#include "silt/tau.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace silt;

namespace {

struct Globals {
  std::uint32_t field_char = kDefaultCharacteristic;
  int max_path_len = kDefaultMaxPathLength;
  int knitting_cap = kDefaultKnittingCap;
  int shift_window = kCompletionWindowCap;
} g;

std::vector<int> zero_based(const std::vector<int>& v, int n) {
  std::vector<int> out;
  for (int x : v) {
    if (x < 1 || x > n) throw InvalidInput("vertex " + std::to_string(x) + " out of range 1.." + std::to_string(n));
    out.push_back(x - 1);
  }
  return out;
}

Module load_module(const std::string& ref, const AlgebraPtr& a) {
  try {
    return builtin_module(ref, a);
  } catch (const ParseError&) {
    if (!fs::exists(ref)) throw;
  }
  return read_module(ref, a);
}

std::vector<Module> load_modules(const std::vector<std::string>& refs, const AlgebraPtr& a) {
  std::vector<Module> out;
  for (const auto& r : refs)
    for (auto& m : decompose(load_module(r, a))) out.push_back(std::move(m));
  return out;
}

json labels(const IndecCatalog& cat, const std::vector<int>& idx) {
  json out = json::array();
  for (int i : idx) out.push_back(module_label(cat.modules[i]));
  return out;
}

json classify_json(const IndecCatalog& cat, const ClassificationReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    json e{{"check", x.check}, {"detail", x.detail}};
    if (x.module >= 0) e["module"] = module_label(cat.modules[x.module]);
    if (!x.path.empty()) e["path"] = labels(cat, x.path);
    w.push_back(e);
  }
  return json{{"gl_dim", r.gl_dim >= kDimInfinite ? json("inf") : json(r.gl_dim)},
              {"hereditary", r.is_hereditary},
              {"shod", r.is_shod},
              {"strictly_shod", r.is_strictly_shod},
              {"weakly_shod", r.is_weakly_shod},
              {"LA", labels(cat, r.LA)},
              {"RA", labels(cat, r.RA)},
              {"laura_complement", labels(cat, r.laura_complement)},
              {"witness", w},
              {"notes", r.notes}};
}

std::string dims_string(const Module& m) {
  std::string s;
  for (int d : m.dims()) s += std::to_string(d);
  return s;
}

std::string presentation_text(const AssociativeAlgebra& b) {
  if (b.dim() == 0) return "vertices 0\n";
  return format_algebra(*gabriel_presentation(b).algebra);
}

json certificate_json(const SiltingCertificate& c) {
  return json{{"presilting", c.presilting}, {"silting", c.silting},   {"basic", c.basic},
              {"classes", c.distinct_classes}, {"rank", c.rank},     {"failure", c.failure}};
}

int emit_report(const harness::VerificationReport& rep, bool as_json) {
  const json j = rep.to_json();
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << harness::render_text(j);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"silt: bound quiver algebras, silting and tau-tilting reduction"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field-char", g.field_char, "prime characteristic of the ground field")->capture_default_str();
  app.add_option("--max-path-len", g.max_path_len, "longest path considered when building algebras")->capture_default_str();
  app.add_option("--knitting-cap", g.knitting_cap, "maximal number of AR meshes")->capture_default_str();
  app.add_option("--shift-window", g.shift_window, "shift window for silting completion")->capture_default_str();

  std::function<int()> action;
  auto read = [](const std::string& f) { return read_algebra(f, g.max_path_len); };
  auto catalog = [](const AlgebraPtr& a) { return enumerate_indecomposables(a, g.knitting_cap); };

  // algebra check|show
  auto* alg = app.add_subcommand("algebra", "parse and inspect an algebra file");
  alg->require_subcommand(1);
  std::string file;
  auto* alg_check = alg->add_subcommand("check", "validate an algebra file");
  alg_check->add_option("file", file)->required();
  alg_check->callback([&] {
    action = [&] {
      const auto a = read(file);
      std::cout << "ok: " << a->vertex_count() << " vertices, " << a->quiver().arrow_count() << " arrows, dim "
                << a->dim() << "\n";
      return 0;
    };
  });
  auto* alg_show = alg->add_subcommand("show", "normalized file and path basis");
  alg_show->add_option("file", file)->required();
  alg_show->callback([&] {
    action = [&] {
      const auto a = read(file);
      std::cout << format_algebra(*a) << "# basis (" << a->dim() << "):";
      for (const auto& p : a->basis()) std::cout << " " << path_string(a->quiver(), p);
      std::cout << "\n";
      return 0;
    };
  });

  bool as_json = false;
  auto* cls = app.add_subcommand("classify", "global dimension, shod, weakly shod, L_A and R_A");
  cls->add_option("file", file)->required();
  cls->add_flag("--json", as_json);
  cls->callback([&] {
    action = [&] {
      const auto cat = catalog(read(file));
      const json j = classify_json(cat, classify(cat));
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
      }
      return 0;
    };
  });

  auto* ind = app.add_subcommand("indec", "list indecomposable modules");
  ind->add_option("file", file)->required();
  ind->callback([&] {
    action = [&] {
      const auto cat = catalog(read(file));
      for (int i = 0; i < cat.size(); ++i) {
        std::cout << i + 1 << "\t" << module_label(cat.modules[i]) << "\tdim " << dims_string(cat.modules[i]) << "\tpd "
                  << cat.pd[i] << "\tid " << cat.id[i] << "\n";
      }
      std::cout << cat.size() << " indecomposables, " << cat.meshes << " meshes\n";
      return 0;
    };
  });

  std::vector<int> verts;
  auto* quo = app.add_subcommand("quotient", "A/<e> for e the sum of the given vertices");
  quo->add_option("file", file)->required();
  quo->add_option("--cut", verts, "vertices (1-based)")->delimiter(',')->required();
  quo->callback([&] {
    action = [&] {
      const auto a = read(file);
      std::cout << format_algebra(*idempotent_quotient(*a, zero_based(verts, a->vertex_count())));
      return 0;
    };
  });

  auto* cor = app.add_subcommand("corner", "eAe for e the sum of the given vertices");
  cor->add_option("file", file)->required();
  cor->add_option("--keep", verts, "vertices (1-based)")->delimiter(',')->required();
  cor->callback([&] {
    action = [&] {
      const auto a = read(file);
      std::cout << presentation_text(corner_algebra(*a, zero_based(verts, a->vertex_count())));
      return 0;
    };
  });

  // silting over a hereditary algebra
  auto* sil = app.add_subcommand("silting", "silting objects in the derived category of a hereditary algebra");
  sil->require_subcommand(1);
  std::string dobj;
  int at = 0;
  bool right = false;
  auto* sil_check = sil->add_subcommand("check", "presilting and silting certificate");
  sil_check->add_option("algebra", file)->required();
  sil_check->add_option("object", dobj)->required();
  sil_check->callback([&] {
    action = [&] {
      const auto a = read(file);
      const auto t = read_dobj(dobj, a);
      const auto c = is_silting(t);
      json j = certificate_json(c);
      j["object"] = object_label(t);
      std::cout << j.dump(2) << "\n";
      return c.silting ? 0 : 1;
    };
  });
  auto* sil_mut = sil->add_subcommand("mutate", "left (default) or right mutation at a summand");
  sil_mut->add_option("algebra", file)->required();
  sil_mut->add_option("object", dobj)->required();
  sil_mut->add_option("--at", at, "summand position (1-based)")->required();
  sil_mut->add_flag("--right", right);
  sil_mut->callback([&] {
    action = [&] {
      const auto a = read(file);
      const auto t = read_dobj(dobj, a);
      if (at < 1 || at > t.size()) throw InvalidInput("--at out of range");
      const auto mu = right ? right_mutation(t, at - 1) : left_mutation(t, at - 1);
      std::cout << "# " << object_label(t) << " -> " << object_label(mu.result) << "\n" << format_dobj(mu.result);
      return 0;
    };
  });
  auto* sil_comp = sil->add_subcommand("complete", "complement D with N + D silting and Hom(D, N[i]) = 0");
  sil_comp->add_option("algebra", file)->required();
  sil_comp->add_option("object", dobj)->required();
  sil_comp->callback([&] {
    action = [&] {
      const auto a = read(file);
      const auto n = read_dobj(dobj, a);
      const auto pc = perp_completion(n, catalog(a), g.shift_window);
      std::cout << "# initial " << object_label(pc.initial) << ", " << pc.mutations << " mutations\n";
      std::cout << format_dobj(pc.complement);
      return 0;
    };
  });
  std::vector<int> dpos;
  auto* sil_red = sil->add_subcommand("reduce", "End(T)/<e_D> and End(S_N) for D a part of T");
  sil_red->add_option("algebra", file)->required();
  sil_red->add_option("object", dobj)->required();
  sil_red->add_option("--d", dpos, "summand positions of D (1-based)")->delimiter(',')->required();
  sil_red->callback([&] {
    action = [&] {
      const auto a = read(file);
      const auto t = read_dobj(dobj, a);
      const auto r = silting_reduce(t, zero_based(dpos, t.size()));
      const bool iso = r.end_t_mod_ed.dim() == r.end_s_n.dim() &&
                       (r.end_s_n.dim() == 0 || presentations_isomorphic(*gabriel_presentation(r.end_t_mod_ed).algebra,
                                                                         *gabriel_presentation(r.end_s_n).algebra));
      std::cout << "# S_N = " << object_label(r.s_n) << "\n# End(T)/<e_D>\n"
                << presentation_text(r.end_t_mod_ed) << "# End(S_N)\n"
                << presentation_text(r.end_s_n) << "# isomorphic: " << (iso ? "yes" : "no") << "\n";
      return iso ? 0 : 1;
    };
  });

  std::vector<std::string> refs;
  auto* tr = app.add_subcommand("taured", "tau-tilting reduction End(U_Z)/<e_Z>");
  tr->add_option("file", file)->required();
  tr->add_option("--module", refs, "module files or P(i), I(i), S(i), interval(i,j)")->required();
  tr->callback([&] {
    action = [&] {
      const auto a = read(file);
      const auto cat = catalog(a);
      const auto red = tau_tilting_reduction(cat, load_modules(refs, a));
      json j{{"bongartz", labels(cat, red.completion.summands)}, {"dim_B", red.b.dim()}, {"dim_C", red.c.dim()}};
      if (red.c.dim() > 0) {
        const auto c = classify(red.presentation.algebra, g.knitting_cap);
        j["C"] = classify_json(catalog(red.presentation.algebra), c);
        std::cout << format_algebra(*red.presentation.algebra);
      }
      std::cout << "# " << j.dump() << "\n";
      return 0;
    };
  });

  auto* en = app.add_subcommand("endo", "Gabriel presentation of End(T)");
  en->add_option("file", file)->required();
  en->add_option("--summands", refs, "module files or builtins")->delimiter(',')->required();
  en->callback([&] {
    action = [&] {
      const auto a = read(file);
      const auto t = load_modules(refs, a);
      bool rigid = true, tau_free = true;
      for (const auto& x : t)
        for (const auto& y : t) {
          rigid = rigid && ext1_dim(x, y) == 0;
          tau_free = tau_free && is_tau_rigid(std::vector<Module>{x, y});
        }
      std::cout << presentation_text(endomorphism_algebra(t));
      std::cout << "# rigid: " << (rigid ? "yes" : "no") << ", tau-rigid: " << (tau_free ? "yes" : "no") << "\n";
      return 0;
    };
  });

  // generators
  auto* gen = app.add_subcommand("gen", "generate algebra files");
  gen->require_subcommand(1);
  int n = 0, k = 0;
  std::vector<int> kill;
  auto* gen_ank = gen->add_subcommand("ank", "A(n,k): linear A_n with k-2 consecutive zero relations");
  gen_ank->add_option("--n", n)->required();
  gen_ank->add_option("--k", k)->required();
  gen_ank->callback([&] {
    action = [&] {
      std::cout << format_algebra(*generate_Ank(n, k));
      return 0;
    };
  });
  auto* gen_mono = gen->add_subcommand("monomial", "linear A_n with chosen length-2 paths killed");
  gen_mono->add_option("--n", n)->required();
  gen_mono->add_option("--kill", kill, "i kills a<i+1>.a<i>")->delimiter(',');
  gen_mono->callback([&] {
    action = [&] {
      std::cout << format_algebra(*linear_monomial_algebra(n, kill));
      return 0;
    };
  });

  // verification
  auto* ver = app.add_subcommand("verify", "regression suites");
  ver->require_subcommand(1);
  harness::PaperOptions po;
  auto* vp = ver->add_subcommand("paper", "the A(n,k) claims, closure, silting and oracle checks");
  vp->add_option("--only", po.only, "check names")->delimiter(',');
  vp->add_flag("--inject-fault", po.inject_fault, "use a wrong relation for A(4,3)");
  vp->add_option("--seed", po.seed)->capture_default_str();
  vp->add_option("--threads", po.corpus.threads);
  vp->add_flag("--json", as_json);
  vp->callback([&] {
    action = [&] { return emit_report(harness::verify_paper(po), as_json); };
  });
  auto* vc = ver->add_subcommand("closure", "closure fuzzing over A(n,k) and random monomial algebras");
  vc->add_option("--seed", po.corpus.seed)->capture_default_str();
  vc->add_option("--max-n", po.corpus.max_n)->capture_default_str();
  vc->add_option("--random-count", po.corpus.random_count)->capture_default_str();
  vc->add_option("--random-n", po.corpus.random_n)->capture_default_str();
  vc->add_option("--threads", po.corpus.threads);
  vc->add_flag("--json", as_json);
  vc->callback([&] {
    action = [&] { return emit_report(harness::closure_fuzz(po.corpus), as_json); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (g.field_char != kDefaultCharacteristic) set_field_characteristic(g.field_char);
    return action ? action() : 0;
  } catch (const SiltError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
