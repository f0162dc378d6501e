#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fincat/errors.hpp"
#include "fincat/json_io.hpp"
#include "fincat/testkit.hpp"
#include "fincat/theorems.hpp"

namespace {

using namespace fincat;

Json violations_json(const ValidationReport& rep) {
  Json arr = Json::array();
  for (const auto& v : rep.violations) {
    Json names = Json::array();
    for (const auto& n : v.names) names.push_back(n.str());
    arr.push_back(
        {{"law", v.law}, {"names", std::move(names)}, {"detail", v.detail}});
  }
  return arr;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport rep;
  if (const auto* c = std::get_if<FinCategory>(&inst.value)) {
    rep.merge(validate_category(*c), "");
  } else if (const auto* p = std::get_if<SetPresheaf>(&inst.value)) {
    rep.merge(validate_category(p->base()), "base-");
    rep.merge(validate_set_presheaf(*p), "");
  } else if (const auto* b = std::get_if<BiPresheaf>(&inst.value)) {
    rep.merge(validate_category(b->base_c), "first-base-");
    rep.merge(validate_category(b->base_d), "second-base-");
    rep.merge(validate_set_presheaf(b->presheaf), "");
  } else {
    const auto& p = std::get<CatPresheaf>(inst.value);
    rep.merge(validate_category(p.base()), "base-");
    for (int a = 0; a < p.base().object_count(); ++a)
      rep.merge(validate_category(p.fiber(a)),
                "fiber(" + p.base().object(a).str() + ")-");
    rep.merge(validate_cat_presheaf(p), "");
  }
  return rep;
}

int run_validate(const std::string& path, bool as_json) {
  Instance inst = instance_from_json(read_json_file(path));
  ValidationReport rep = validate_instance(inst);
  if (as_json) {
    Json out = {{"ok", rep.ok()}, {"violations", violations_json(rep)}};
    std::cout << canonical_text(out);
  } else if (rep.ok()) {
    std::cout << "ok\n";
  } else {
    std::cout << rep.summary() << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int run_construct(const std::string& kind,
                  const std::vector<std::string>& inputs,
                  const std::string& out_path, const std::string& at,
                  std::size_t bound) {
  Bounds b;
  if (bound > 0) b.max_candidates = bound;
  auto need = [&](std::size_t n) {
    if (inputs.size() != n)
      throw ParseError("construct " + kind + " expects " + std::to_string(n) +
                       " input file(s)");
  };
  auto need_at = [&]() {
    if (at.empty()) throw ParseError("construct " + kind + " requires --at");
    return CanonicalName::parse(at);
  };

  Json result;
  if (kind == "elements") {
    need(1);
    result = to_json(
        category_of_elements(set_presheaf_from_json(read_json_file(inputs[0])))
            .cat);
  } else if (kind == "grothendieck") {
    need(1);
    result = to_json(
        grothendieck(cat_presheaf_from_json(read_json_file(inputs[0]))).cat);
  } else if (kind == "functor-cat") {
    need(2);
    FinCategory c = category_from_json(read_json_file(inputs[0]));
    FinCategory d = category_from_json(read_json_file(inputs[1]));
    result = to_json(functor_category(c, d, b).cat);
  } else if (kind == "slice") {
    need(1);
    FinCategory c = category_from_json(read_json_file(inputs[0]));
    result = to_json(slice_category(c, need_at()));
  } else if (kind == "yoneda") {
    need(1);
    FinCategory c = category_from_json(read_json_file(inputs[0]));
    result = to_json(yoneda_presheaf(c, need_at()));
  } else if (kind == "pi-presheaf") {
    need(1);
    BiPresheaf bi = bi_presheaf_from_json(read_json_file(inputs[0]));
    result = to_json(pi_presheaf(bi.base_c, bi.base_d, bi.presheaf, b));
  } else if (kind == "product-pi") {
    need(1);
    BiPresheaf bi = bi_presheaf_from_json(read_json_file(inputs[0]));
    result = to_json(product_category_pi(bi.base_c, bi.base_d, bi.presheaf, b));
  } else if (kind == "sigma-pq") {
    need(2);
    CatPresheaf p = cat_presheaf_from_json(read_json_file(inputs[0]));
    CatPresheaf q = cat_presheaf_from_json(read_json_file(inputs[1]));
    if (!(q.base() == grothendieck(p).cat))
      throw InvalidArgument(
          "the second presheaf must live on the total category of the first");
    result = to_json(sigma_pq(p, q));
  } else {
    throw ParseError("unknown construct kind \"" + kind + "\"");
  }
  write_text_file(out_path, canonical_text(result));
  return 0;
}

struct CheckRun {
  std::string label;
  TheoremReport report;
};

TheoremReport single(const char* name, bool ok) {
  TheoremReport t;
  t.add(name, ok);
  return t;
}

int report_runs(const std::vector<CheckRun>& runs, bool as_json) {
  bool all = true;
  for (const auto& r : runs) all = all && r.report.ok();
  if (as_json) {
    Json arr = Json::array();
    for (const auto& r : runs) {
      Json checks = Json::array();
      for (const auto& c : r.report.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      arr.push_back(
          {{"label", r.label}, {"ok", r.report.ok()}, {"checks", checks}});
    }
    std::cout << canonical_text(Json{{"ok", all}, {"results", arr}});
  } else {
    for (const auto& r : runs) {
      if (r.report.ok()) {
        std::cout << r.label << ": ok\n";
      } else {
        std::cout << r.label << ": FAIL\n";
        std::istringstream lines(r.report.summary());
        std::string line;
        while (std::getline(lines, line)) std::cout << "  " << line << "\n";
      }
    }
    std::cout << (all ? "all passed" : "failures found") << " (" << runs.size()
              << " run" << (runs.size() == 1 ? "" : "s") << ")\n";
  }
  return all ? 0 : 1;
}

int run_check(const std::string& thm, const std::vector<std::string>& files,
              long seeds, unsigned long long seed0, std::size_t bound,
              bool as_json, const GenOptions& g) {
  Bounds b;
  if (bound > 0) b.max_candidates = bound;
  std::vector<CheckRun> runs;

  if (!files.empty()) {
    if (thm == "ac" || thm == "commute") {
      for (const auto& f : files) {
        BiPresheaf bi = bi_presheaf_from_json(read_json_file(f));
        runs.push_back({f, thm == "ac"
                               ? check_choice(bi.base_c, bi.base_d, bi.presheaf, b)
                               : check_commutativity(bi.base_c, bi.base_d,
                                                     bi.presheaf)});
      }
    } else if (thm == "assoc") {
      if (files.size() != 2)
        throw ParseError("check assoc expects two files: the base presheaf "
                         "and the presheaf over its total category");
      CatPresheaf p = cat_presheaf_from_json(read_json_file(files[0]));
      CatPresheaf q = cat_presheaf_from_json(read_json_file(files[1]));
      if (!(q.base() == grothendieck(p).cat))
        throw InvalidArgument(
            "the second presheaf must live on the total category of the first");
      runs.push_back({files[0] + " + " + files[1], check_assoc(p, q)});
    } else if (thm == "disc-fib") {
      for (const auto& f : files) {
        Instance inst = instance_from_json(read_json_file(f));
        bool ok;
        if (const auto* sp = std::get_if<SetPresheaf>(&inst.value))
          ok = check_discrete_fibration(category_of_elements(*sp).projection);
        else if (const auto* cp = std::get_if<CatPresheaf>(&inst.value))
          ok = check_discrete_fibration(grothendieck(*cp).projection);
        else
          throw ParseError(
              "check disc-fib expects a set_presheaf or cat_presheaf file");
        runs.push_back({f, single("discrete-fibration", ok)});
      }
    } else if (thm == "split-fib") {
      for (const auto& f : files)
        runs.push_back(
            {f, single("split-fibration",
                       check_split_fibration(
                           cat_presheaf_from_json(read_json_file(f))))});
    } else {
      throw ParseError("unknown theorem \"" + thm + "\"");
    }
    return report_runs(runs, as_json);
  }

  if (seeds <= 0)
    throw ParseError("provide input files or --seeds N");
  for (long i = 0; i < seeds; ++i) {
    unsigned long long seed = seed0 + static_cast<unsigned long long>(i);
    Rng rng(seed);
    std::string label = "seed " + std::to_string(seed);
    if (thm == "ac" || thm == "commute") {
      FinCategory c = gen_category(rng, g);
      FinCategory d = gen_category(rng, g);
      SetPresheaf r = gen_set_presheaf(rng, product_category(c, d), g);
      runs.push_back({label, thm == "ac" ? check_choice(c, d, r, b)
                                         : check_commutativity(c, d, r)});
    } else if (thm == "assoc") {
      FinCategory c = gen_category(rng, g);
      CatPresheaf p = gen_cat_presheaf(rng, c, g);
      CatPresheaf q = gen_cat_presheaf(rng, grothendieck(p).cat, g);
      runs.push_back({label, check_assoc(p, q)});
    } else if (thm == "disc-fib") {
      FinCategory c = gen_category(rng, g);
      SetPresheaf p = gen_set_presheaf(rng, c, g);
      runs.push_back(
          {label, single("discrete-fibration",
                         check_discrete_fibration(
                             category_of_elements(p).projection))});
    } else if (thm == "split-fib") {
      FinCategory c = gen_category(rng, g);
      CatPresheaf p = gen_cat_presheaf(rng, c, g);
      runs.push_back({label, single("split-fibration",
                                    check_split_fibration(p))});
    } else {
      throw ParseError("unknown theorem \"" + thm + "\"");
    }
  }
  return report_runs(runs, as_json);
}

int run_gen(const std::string& kind, unsigned long long seed,
            const GenOptions& g, const std::string& out_path) {
  Rng rng(seed);
  Json j;
  if (kind == "category") {
    j = to_json(gen_category(rng, g));
  } else if (kind == "set-presheaf") {
    FinCategory c = gen_category(rng, g);
    j = to_json(gen_set_presheaf(rng, c, g));
  } else if (kind == "bi-presheaf") {
    BiPresheaf bi;
    bi.base_c = gen_category(rng, g);
    bi.base_d = gen_category(rng, g);
    bi.presheaf =
        gen_set_presheaf(rng, product_category(bi.base_c, bi.base_d), g);
    j = to_json(bi);
  } else if (kind == "cat-presheaf") {
    FinCategory c = gen_category(rng, g);
    j = to_json(gen_cat_presheaf(rng, c, g));
  } else if (kind == "q-presheaf") {
    // same draw order as cat-presheaf, so equal seeds give the matching base
    FinCategory c = gen_category(rng, g);
    CatPresheaf p = gen_cat_presheaf(rng, c, g);
    j = to_json(gen_cat_presheaf(rng, grothendieck(p).cat, g), "q_presheaf");
  } else {
    throw ParseError("unknown gen kind \"" + kind + "\"");
  }
  write_text_file(out_path, canonical_text(j));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite categories, presheaves and their total categories"};
  app.require_subcommand(1);

  std::string v_path;
  bool v_json = false;
  auto* v = app.add_subcommand("validate", "check the laws of an instance file");
  v->add_option("path", v_path, "instance json file")->required();
  v->add_flag("--json", v_json, "machine readable report");

  std::string c_kind, c_out, c_at;
  std::vector<std::string> c_in;
  std::size_t c_bound = 0;
  auto* con = app.add_subcommand("construct",
                                 "build a derived structure and write it");
  con->add_option("kind", c_kind,
                  "elements|grothendieck|functor-cat|slice|yoneda|"
                  "pi-presheaf|product-pi|sigma-pq")
      ->required();
  con->add_option("inputs", c_in, "input instance files")->required();
  con->add_option("--out", c_out, "output file")->required();
  con->add_option("--at", c_at, "object name for slice and yoneda");
  con->add_option("--bound", c_bound, "candidate cap for searches");

  std::string t_name;
  std::vector<std::string> t_files;
  long t_seeds = 0;
  unsigned long long t_seed0 = 1;
  std::size_t t_bound = 0;
  bool t_json = false;
  GenOptions t_gen;
  auto* ch = app.add_subcommand(
      "check", "verify an equivalence on files or on generated batches");
  ch->add_option("theorem", t_name, "ac|assoc|commute|disc-fib|split-fib")
      ->required();
  ch->add_option("files", t_files, "instance files");
  ch->add_option("--seeds", t_seeds, "number of generated instances");
  ch->add_option("--seed", t_seed0, "first seed (default 1)");
  ch->add_option("--bound", t_bound, "candidate cap for searches");
  ch->add_flag("--json", t_json, "machine readable report");
  ch->add_option("--objects", t_gen.max_objects, "generator object cap");
  ch->add_option("--morphisms", t_gen.max_extra_morphisms,
                 "generator cap on non-identity morphisms");
  ch->add_option("--fiber", t_gen.max_fiber,
                 "generator value and fiber size cap");

  std::string g_kind, g_out;
  unsigned long long g_seed = 0;
  GenOptions g_gen;
  auto* g = app.add_subcommand("gen", "write a seeded random instance");
  g->add_option("kind", g_kind,
                "category|set-presheaf|bi-presheaf|cat-presheaf|q-presheaf")
      ->required();
  g->add_option("--seed", g_seed, "seed")->required();
  g->add_option("--out", g_out, "output file")->required();
  g->add_option("--objects", g_gen.max_objects, "object cap");
  g->add_option("--morphisms", g_gen.max_extra_morphisms,
                "cap on non-identity morphisms");
  g->add_option("--fiber", g_gen.max_fiber, "value and fiber size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(v)) return run_validate(v_path, v_json);
    if (app.got_subcommand(con))
      return run_construct(c_kind, c_in, c_out, c_at, c_bound);
    if (app.got_subcommand(ch))
      return run_check(t_name, t_files, t_seeds, t_seed0, t_bound, t_json,
                       t_gen);
    if (app.got_subcommand(g)) return run_gen(g_kind, g_seed, g_gen, g_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const RetryExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
