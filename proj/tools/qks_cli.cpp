// qks: command-line front end for the quiver Kostka-Shoji library.
//
//   qks ks --r 2 --mu 2,1 --eta 2,2 --i1 1 --method all
//   qks charge --mu 2,1 --eta 2,2 --word 4,2,1,3,2,1
//   qks tableaux --shape-0 2,2 --shape-1 2,1 --mu 2,1 --eta 2,2 --i1 1
//   qks rotate --mu 2,1 --eta 2,2 --word 2,4,2,1,3,1 --steps 1
//   qks catabolize --t0 "1,1,2;2" --t1 "1,3" --node 0 --p 2
//   qks wreath induction --n 2 --r 2 --module regular
//   qks verify theorem-main --max-n 4 --max-r 3
//
// Global flags: --out {pretty,csv,json}, --jobs N, --seed S.
// Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 integrity error.

#include <algorithm>
#include <array>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qks/catabolism.hpp"
#include "qks/json_io.hpp"
#include "qks/laurent.hpp"
#include "qks/lr_charge.hpp"
#include "qks/partition.hpp"
#include "qks/sweep.hpp"
#include "qks/symfunc.hpp"
#include "qks/tableau.hpp"
#include "qks/verify.hpp"
#include "qks/wreath.hpp"

namespace {

using qks::json;

constexpr int kMaxNodes = 8;  // node-indexed flags --shape-K / --target-K / --tK

enum class OutFmt { pretty, csv, json_out };

struct Global {
  std::string out = "pretty";
  int jobs = 1;
  unsigned seed = 1;

  OutFmt fmt() const {
    if (out == "csv") return OutFmt::csv;
    if (out == "json") return OutFmt::json_out;
    return OutFmt::pretty;
  }
};

// "2,1" -> {2,1}; "" -> {}.  All failures become usage errors naming the flag.
std::vector<int> parse_ints(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const size_t b = tok.find_first_not_of(" \t");
    const size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument(flag + ": empty entry in list '" + s + "'");
    tok = tok.substr(b, e - b + 1);
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != tok.size())
      throw std::invalid_argument(flag + ": expected comma-separated integers, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::string list_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// The library constructors assert; validate user input here so bad shapes are
// usage errors, not aborts.
qks::Partition make_partition(const std::vector<int>& parts, const std::string& flag) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument(flag + ": negative part in " + list_str(parts));
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw std::invalid_argument(flag + ": parts must be weakly decreasing, got " + list_str(parts));
  }
  return qks::Partition(parts);
}

// Rows separated by ';', entries by ','.  "1,1,2;2,3" is the tableau with
// first row 1 1 2 over second row 2 3.
qks::Tableau make_tableau(const std::string& s, const std::string& flag) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_ints(row, flag));
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.empty()) throw std::invalid_argument(flag + ": empty row");
    if (!std::is_sorted(r.begin(), r.end()))
      throw std::invalid_argument(flag + ": rows must weakly increase");
    if (r.front() < 1) throw std::invalid_argument(flag + ": letters must be >= 1");
    if (i > 0) {
      if (r.size() > rows[i - 1].size())
        throw std::invalid_argument(flag + ": row lengths must weakly decrease");
      for (size_t j = 0; j < r.size(); ++j)
        if (r[j] <= rows[i - 1][j])
          throw std::invalid_argument(flag + ": columns must strictly increase");
    }
  }
  return qks::Tableau(rows);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t j = 0; j < cells.size(); ++j) {
      if (j) s += ',';
      s += csv_cell(cells[j]);
    }
    std::cout << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void emit_aligned(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> w;
  for (const auto& h : header) w.push_back(h.size());
  for (const auto& r : rows)
    for (size_t j = 0; j < r.size(); ++j) {
      if (j >= w.size()) w.push_back(0);
      w[j] = std::max(w[j], r[j].size());
    }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t j = 0; j < cells.size(); ++j) {
      s += cells[j];
      if (j + 1 < cells.size()) s.append(w[j] - cells[j].size() + 2, ' ');
    }
    std::cout << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// One sink for all three output formats.  JSON gets the full document; the
// text formats get a header row, data rows, and (pretty only) preamble lines.
void emit(OutFmt f, const json& doc, const std::vector<std::string>& preamble,
          const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows) {
  switch (f) {
    case OutFmt::json_out:
      std::cout << doc.dump(2) << '\n';
      break;
    case OutFmt::csv:
      emit_csv(header, rows);
      break;
    case OutFmt::pretty:
      for (const auto& l : preamble) std::cout << l << '\n';
      emit_aligned(header, rows);
      break;
  }
}

json tableau_json(const qks::Tableau& t) { return json(t.rows()); }

json multitableau_json(const qks::MultiTableau& t) {
  json a = json::array();
  for (int i = 0; i < t.r(); ++i) a.push_back(tableau_json(t[i]));
  return a;
}

json tensor_json(const qks::TensorPoly& f) {
  json a = json::array();
  for (const auto& [mp, c] : f.terms)
    a.push_back(json{{"index", qks::to_json(mp)}, {"coeff", qks::to_json(c)}});
  return a;
}

// ---------------------------------------------------------------------------
// ks: the full table over every shape of the right size, by one method or by
// all three with an agreement column.

int run_ks(const Global& g, int r, int i1, const std::string& mu_s, const std::string& eta_s,
           const std::string& method) {
  const std::vector<int> mu = parse_ints(mu_s, "--mu");
  const std::vector<int> eta = parse_ints(eta_s, "--eta");
  const qks::RectTriple triple(r, i1, mu, eta);
  const auto shapes = qks::sweep_shapes(triple);

  const std::map<std::string, qks::Method> by_name = {
      {"tableau", qks::Method::tableau},
      {"recurrence", qks::Method::recurrence},
      {"operators", qks::Method::operators}};
  const auto named = by_name.find(method);
  if (method != "all" && named == by_name.end())
    throw std::invalid_argument("unknown --method '" + method +
                                "' (want tableau, recurrence, operators, or all)");

  json doc;
  doc["r"] = r;
  doc["i1"] = i1;
  doc["mu"] = mu;
  doc["eta"] = eta;
  doc["method"] = method;
  std::vector<std::string> pre = {"r=" + std::to_string(r) + "  i1=" + std::to_string(i1) +
                                  "  mu=" + list_str(mu) + "  eta=" + list_str(eta) +
                                  "  method=" + method};
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  int rc = 0;

  auto red_of = [](const qks::KsTables& t, const qks::MultiPartition& lam) {
    const auto it = t.reduced.find(lam);
    return it == t.reduced.end() ? qks::UniPoly() : it->second;
  };
  auto full_of = [](const qks::KsTables& t, const qks::MultiPartition& lam) {
    const auto it = t.full.find(lam);
    return it == t.full.end() ? qks::ArrowLaurent() : it->second;
  };

  if (method != "all") {
    const qks::KsTables t = qks::ks_tables(triple, named->second, g.jobs);
    header = {"lambda", "reduced", "full"};
    for (const auto& lam : shapes) {
      const qks::UniPoly red = red_of(t, lam);
      const qks::ArrowLaurent full = full_of(t, lam);
      rows.push_back({lam.to_string(), red.to_string(), full.to_string()});
      jrows.push_back(json{{"lambda", qks::to_json(lam)},
                           {"reduced", qks::to_json(red)},
                           {"full", qks::to_json(full)}});
    }
  } else {
    const qks::KsTables tab = qks::ks_tables(triple, qks::Method::tableau, g.jobs);
    const qks::KsTables rec = qks::ks_tables(triple, qks::Method::recurrence, g.jobs);
    const qks::KsTables ops = qks::ks_tables(triple, qks::Method::operators, g.jobs);
    bool all_agree = true;
    header = {"lambda", "tableau", "recurrence", "operators", "agree"};
    for (const auto& lam : shapes) {
      const auto rt = red_of(tab, lam), rr = red_of(rec, lam), ro = red_of(ops, lam);
      const auto ft = full_of(tab, lam), fr = full_of(rec, lam), fo = full_of(ops, lam);
      const bool agree = rt == rr && rr == ro && ft == fr && fr == fo;
      all_agree = all_agree && agree;
      rows.push_back(
          {lam.to_string(), rt.to_string(), rr.to_string(), ro.to_string(), agree ? "yes" : "NO"});
      jrows.push_back(json{{"lambda", qks::to_json(lam)},
                           {"reduced",
                            json{{"tableau", qks::to_json(rt)},
                                 {"recurrence", qks::to_json(rr)},
                                 {"operators", qks::to_json(ro)}}},
                           {"full",
                            json{{"tableau", qks::to_json(ft)},
                                 {"recurrence", qks::to_json(fr)},
                                 {"operators", qks::to_json(fo)}}},
                           {"agree", agree}});
    }
    doc["agree"] = all_agree;
    if (!all_agree) rc = 3;
  }
  doc["rows"] = jrows;
  emit(g.fmt(), doc, pre, header, rows);
  if (rc != 0) std::cerr << "error: table-filling methods disagree (see agree column)\n";
  return rc;
}

// ---------------------------------------------------------------------------

int run_charge(const Global& g, const std::string& mu_s, const std::string& eta_s,
               const std::string& word_s) {
  const qks::LRContext ctx(parse_ints(mu_s, "--mu"), parse_ints(eta_s, "--eta"));
  const qks::Word w = parse_ints(word_s, "--word");
  if (!qks::is_lr_word(w, ctx))
    throw std::invalid_argument("--word is not an LR word for this (mu, eta)");
  const int c = qks::lr_charge(w, ctx);
  json doc{{"mu", ctx.mu()}, {"eta", ctx.eta()}, {"word", w}, {"charge", c}};
  emit(g.fmt(), doc, {"mu=" + list_str(ctx.mu()) + "  eta=" + list_str(ctx.eta())},
       {"word", "charge"}, {{qks::word_to_string(w), std::to_string(c)}});
  return 0;
}

int run_rotate(const Global& g, const std::string& mu_s, const std::string& eta_s,
               const std::string& word_s, long long steps) {
  const qks::LRContext ctx(parse_ints(mu_s, "--mu"), parse_ints(eta_s, "--eta"));
  const qks::Word w = parse_ints(word_s, "--word");
  if (!qks::is_lr_word(w, ctx))
    throw std::invalid_argument("--word is not an LR word for this (mu, eta)");
  // The action has order N = |word|, so negative step counts fold back in.
  const long long n = static_cast<long long>(w.size());
  const qks::Word res = qks::rotate(w, ctx, n == 0 ? 0 : ((steps % n) + n) % n);
  const int cw = qks::lr_charge(w, ctx);
  const int cr = qks::lr_charge(res, ctx);
  json doc{{"mu", ctx.mu()}, {"eta", ctx.eta()}, {"word", w},           {"steps", steps},
           {"result", res},  {"charge", cw},     {"result_charge", cr}};
  emit(g.fmt(), doc, {"mu=" + list_str(ctx.mu()) + "  eta=" + list_str(ctx.eta())},
       {"word", "steps", "result", "charge", "result_charge"},
       {{qks::word_to_string(w), std::to_string(steps), qks::word_to_string(res),
         std::to_string(cw), std::to_string(cr)}});
  return 0;
}

// ---------------------------------------------------------------------------
// tableaux: either the LR multitableaux of a shape against (mu, eta, i1), or
// the cascade-surviving fillings against a target multipartition.

int run_tableaux(const Global& g, int r_flag, const std::array<std::string, kMaxNodes>& shape_s,
                 const std::array<bool, kMaxNodes>& shape_given, bool lr_mode,
                 const std::string& mu_s, const std::string& eta_s, int i1, bool ct_mode,
                 const std::array<std::string, kMaxNodes>& target_s,
                 const std::array<bool, kMaxNodes>& target_given) {
  if (lr_mode == ct_mode)
    throw std::invalid_argument(
        "choose one mode: --mu/--eta/--i1 for LR listings, --target-K for cascade listings");

  int r = r_flag;
  for (int k = 0; k < kMaxNodes; ++k)
    if ((shape_given[k] || target_given[k]) && k + 1 > r) r = k + 1;
  if (r < 1) throw std::invalid_argument("give --r or at least one --shape-K");

  std::vector<qks::Partition> comp(r);
  for (int k = 0; k < kMaxNodes; ++k)
    if (shape_given[k]) comp[k] = make_partition(parse_ints(shape_s[k], "--shape-" + std::to_string(k)),
                                                 "--shape-" + std::to_string(k));
  const qks::MultiPartition shape(comp);

  json doc;
  doc["r"] = r;
  doc["shape"] = qks::to_json(shape);
  std::vector<std::string> pre;
  std::vector<std::vector<std::string>> rows;
  json jlist = json::array();

  if (lr_mode) {
    const qks::LRContext ctx(parse_ints(mu_s, "--mu"), parse_ints(eta_s, "--eta"));
    if (i1 < 0 || i1 >= r) throw std::invalid_argument("--i1 out of range");
    doc["mode"] = "lr";
    doc["mu"] = ctx.mu();
    doc["eta"] = ctx.eta();
    doc["i1"] = i1;
    const auto list = qks::lr_multitableaux(shape, ctx, i1);
    for (size_t i = 0; i < list.size(); ++i) {
      const auto& t = list[i];
      const int c = qks::lr_charge(t.word(), ctx);
      const qks::ArrowLaurent wt = qks::tableau_weight(t, ctx);
      rows.push_back({std::to_string(i), t.to_string(), qks::word_to_string(t.word()),
                      std::to_string(c), wt.to_string()});
      jlist.push_back(json{{"components", multitableau_json(t)},
                           {"word", t.word()},
                           {"charge", c},
                           {"weight", qks::to_json(wt)}});
    }
    pre = {"mode=lr  shape=" + shape.to_string() + "  mu=" + list_str(ctx.mu()) +
           "  eta=" + list_str(ctx.eta()) + "  i1=" + std::to_string(i1),
           "count=" + std::to_string(list.size())};
  } else {
    std::vector<qks::Partition> tcomp(r);
    for (int k = 0; k < kMaxNodes; ++k)
      if (target_given[k])
        tcomp[k] = make_partition(parse_ints(target_s[k], "--target-" + std::to_string(k)),
                                  "--target-" + std::to_string(k));
    const qks::MultiPartition target(tcomp);
    doc["mode"] = "cascade";
    doc["target"] = qks::to_json(target);
    const auto list = qks::cascade_tableaux(shape, target);
    const auto sizes = qks::layer_sizes(target);
    for (size_t i = 0; i < list.size(); ++i) {
      const auto& t = list[i];
      const int c = qks::ls_charge(t.word(), sizes);
      rows.push_back({std::to_string(i), t.to_string(), qks::word_to_string(t.word()),
                      std::to_string(c), qks::UniPoly::monomial(c).to_string()});
      jlist.push_back(json{{"components", multitableau_json(t)},
                           {"word", t.word()},
                           {"charge", c},
                           {"weight", qks::to_json(qks::UniPoly::monomial(c))}});
    }
    pre = {"mode=cascade  shape=" + shape.to_string() + "  target=" + target.to_string(),
           "count=" + std::to_string(list.size())};
  }
  doc["count"] = jlist.size();
  doc["tableaux"] = jlist;
  emit(g.fmt(), doc, pre, {"#", "tableau", "word", "charge", "weight"}, rows);
  return 0;
}

// ---------------------------------------------------------------------------

int run_catabolize(const Global& g, const std::array<std::string, kMaxNodes>& tab_s,
                   const std::array<bool, kMaxNodes>& tab_given, bool node_given, int node, int p,
                   bool strip_given, const std::string& strip_s) {
  int r = 0;
  for (int k = 0; k < kMaxNodes; ++k)
    if (tab_given[k]) r = k + 1;
  if (r == 0) throw std::invalid_argument("give the input via --t0, --t1, ...");
  if (node_given == strip_given)
    throw std::invalid_argument("choose one step: --node/--p for cat, --strip for ccat");

  std::vector<qks::Tableau> comp(r);
  for (int k = 0; k < r; ++k)
    if (tab_given[k]) comp[k] = make_tableau(tab_s[k], "--t" + std::to_string(k));
  const qks::MultiTableau t(comp);

  std::optional<qks::MultiTableau> res;
  std::string op;
  if (node_given) {
    if (node < 0 || node >= r) throw std::invalid_argument("--node out of range");
    if (p < 0) throw std::invalid_argument("--p must be nonnegative");
    res = qks::cat(t, node, p);
    op = "cat(node=" + std::to_string(node) + ", p=" + std::to_string(p) + ")";
  } else {
    const std::vector<int> d = parse_ints(strip_s, "--strip");
    if (static_cast<int>(d.size()) != r)
      throw std::invalid_argument("--strip needs exactly one entry per node");
    for (int x : d)
      if (x < 0) throw std::invalid_argument("--strip entries must be nonnegative");
    res = qks::ccat(t, d);
    op = "ccat(d=" + list_str(d) + ")";
  }

  json doc{{"input", multitableau_json(t)}, {"operation", op}, {"defined", res.has_value()}};
  doc["result"] = res ? multitableau_json(*res) : json();
  emit(g.fmt(), doc, {"input=" + t.to_string(), "op=" + op}, {"defined", "result"},
       {{res ? "yes" : "no", res ? res->to_string() : "-"}});
  return 0;
}

// ---------------------------------------------------------------------------
// wreath: both sides of the induction identity, or of the column-rectangle
// identity, with an equality flag.  An inequality would falsify a proved
// statement, so it exits with the integrity code.

int report_check(const Global& g, json doc, const std::string& left_name,
                 const qks::TensorPoly& left, const std::string& right_name,
                 const qks::TensorPoly& right) {
  const bool equal = left == right;
  doc[left_name] = tensor_json(left);
  doc[right_name] = tensor_json(right);
  doc["equal"] = equal;
  emit(g.fmt(), doc, {},
       {"side", "value"},
       {{left_name, left.to_string()},
        {right_name, right.to_string()},
        {"equal", equal ? "yes" : "NO"}});
  if (!equal) {
    std::cerr << "integrity error: " << left_name << " != " << right_name << "\n";
    return 3;
  }
  return 0;
}

int run_wreath_induction(const Global& g, int n, int r, const std::string& module) {
  if (n < 0 || r < 1) throw std::invalid_argument("need n >= 0 and r >= 1");
  qks::SnClassFunction cf;
  if (module == "trivial")
    cf = qks::trivial_character(n);
  else if (module == "sign")
    cf = qks::sign_character(n);
  else if (module == "regular")
    cf = qks::regular_character(n);
  else
    throw std::invalid_argument("unknown --module '" + module + "' (trivial, sign, regular)");
  const qks::InductionCheck chk = qks::induction_frobenius(cf, n, r);
  json doc{{"n", n}, {"r", r}, {"module", module}};
  return report_check(g, std::move(doc), "by_group", chk.by_group, "by_plethysm", chk.by_plethysm);
}

int run_wreath_rmu(const Global& g, const std::string& mu_s, int r) {
  const qks::Partition mu = make_partition(parse_ints(mu_s, "--mu"), "--mu");
  if (r < 1) throw std::invalid_argument("need r >= 1");
  const qks::RmuCheck chk = qks::rmu_identity(mu, r);
  json doc{{"mu", mu.parts()}, {"r", r}};
  return report_check(g, std::move(doc), "induced", chk.induced, "quiver", chk.quiver);
}

// ---------------------------------------------------------------------------

int run_verify(const Global& g, const std::string& suite, int max_n, int max_r) {
  qks::VerifyOptions opt;
  opt.jobs = g.jobs;
  opt.seed = g.seed;
  opt.max_n = max_n;
  opt.max_r = max_r;

  std::vector<qks::SuiteReport> reps;
  if (suite == "all")
    reps = qks::run_all_suites(opt);
  else
    reps.push_back(qks::run_suite(suite, opt));  // unknown names throw -> usage error

  long long failures = 0;
  std::vector<std::vector<std::string>> rows;
  json jsuites = json::array();
  for (const auto& rep : reps) {
    failures += rep.failures;
    rows.push_back({rep.name, rep.passed() ? "PASS" : "FAIL", std::to_string(rep.cases),
                    std::to_string(rep.failures), rep.summary});
    jsuites.push_back(json{{"name", rep.name},
                           {"passed", rep.passed()},
                           {"cases", rep.cases},
                           {"failures", rep.failures},
                           {"summary", rep.summary}});
  }
  json doc{{"suites", jsuites}, {"passed", failures == 0}};
  emit(g.fmt(), doc, {}, {"suite", "status", "cases", "failures", "summary"}, rows);
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  CLI::App app{"Kostka-Shoji polynomials of the cyclic quiver: tables, charges, verifications"};
  app.require_subcommand(1);
  app.add_option("--out", g.out, "output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker count for table sweeps")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled spot checks")->capture_default_str();

  // ks
  auto* ks = app.add_subcommand("ks", "KS table of a rectangle triple over all shapes");
  ks->fallthrough();
  int ks_r = 1, ks_i1 = 0;
  std::string ks_mu, ks_eta, ks_method = "all";
  ks->add_option("--r", ks_r, "number of quiver nodes")->capture_default_str();
  ks->add_option("--i1", ks_i1, "node feeding the first rectangle")->capture_default_str();
  ks->add_option("--mu", ks_mu, "rectangle widths (weakly decreasing)");
  ks->add_option("--eta", ks_eta, "rectangle heights (positive)");
  ks->add_option("--method", ks_method, "tableau | recurrence | operators | all")
      ->capture_default_str();

  // charge
  auto* ch = app.add_subcommand("charge", "charge of an LR word");
  ch->fallthrough();
  std::string ch_mu, ch_eta, ch_word;
  ch->add_option("--mu", ch_mu, "rectangle widths");
  ch->add_option("--eta", ch_eta, "rectangle heights");
  ch->add_option("--word", ch_word, "the word, largest letter first is fine")->required();

  // rotate
  auto* ro = app.add_subcommand("rotate", "rotation action on an LR word");
  ro->fallthrough();
  std::string ro_mu, ro_eta, ro_word;
  long long ro_steps = 1;
  ro->add_option("--mu", ro_mu, "rectangle widths");
  ro->add_option("--eta", ro_eta, "rectangle heights");
  ro->add_option("--word", ro_word, "the word")->required();
  ro->add_option("--steps", ro_steps, "rotation steps (may be negative)")->capture_default_str();

  // tableaux
  auto* tx = app.add_subcommand("tableaux", "LR or cascade tableau listings with charges");
  tx->fallthrough();
  int tx_r = 0, tx_i1 = 0;
  std::string tx_mu, tx_eta;
  std::array<std::string, kMaxNodes> tx_shape, tx_target;
  std::array<bool, kMaxNodes> tx_shape_given{}, tx_target_given{};
  std::array<CLI::Option*, kMaxNodes> tx_shape_opt{}, tx_target_opt{};
  tx->add_option("--r", tx_r, "number of quiver nodes (default: highest flag index + 1)");
  for (int k = 0; k < kMaxNodes; ++k) {
    tx_shape_opt[k] = tx->add_option("--shape-" + std::to_string(k), tx_shape[k],
                                     k == 0 ? "shape component at node 0 ('' for empty)" : "");
    tx_target_opt[k] = tx->add_option("--target-" + std::to_string(k), tx_target[k],
                                      k == 0 ? "cascade target component at node 0" : "");
  }
  auto* tx_mu_opt = tx->add_option("--mu", tx_mu, "rectangle widths (LR mode)");
  auto* tx_eta_opt = tx->add_option("--eta", tx_eta, "rectangle heights (LR mode)");
  tx->add_option("--i1", tx_i1, "node feeding the first rectangle (LR mode)")
      ->capture_default_str();

  // catabolize
  auto* ca = app.add_subcommand("catabolize", "one cat step or one ccat cascade");
  ca->fallthrough();
  int ca_node = 0, ca_p = 0;
  std::string ca_strip;
  std::array<std::string, kMaxNodes> ca_tab;
  std::array<bool, kMaxNodes> ca_tab_given{};
  std::array<CLI::Option*, kMaxNodes> ca_tab_opt{};
  for (int k = 0; k < kMaxNodes; ++k)
    ca_tab_opt[k] = ca->add_option("--t" + std::to_string(k), ca_tab[k],
                                   k == 0 ? "tableau at node 0, rows ';'-separated" : "");
  auto* ca_node_opt = ca->add_option("--node", ca_node, "node of the single cat step");
  ca->add_option("--p", ca_p, "ones to strip in the cat step")->capture_default_str();
  auto* ca_strip_opt = ca->add_option("--strip", ca_strip, "per-node ones to strip (ccat)");

  // wreath
  auto* wr = app.add_subcommand("wreath", "wreath-product identities");
  wr->require_subcommand(1);
  auto* wi = wr->add_subcommand("induction", "graded induction vs plethysm");
  wi->fallthrough();
  int wi_n = 2, wi_r = 2;
  std::string wi_module = "regular";
  wi->add_option("--n", wi_n, "symmetric group degree")->capture_default_str();
  wi->add_option("--r", wi_r, "cyclic group order")->capture_default_str();
  wi->add_option("--module", wi_module, "trivial | sign | regular")->capture_default_str();
  auto* wm = wr->add_subcommand("rmu", "column-rectangle identity");
  wm->fallthrough();
  std::string wm_mu;
  int wm_r = 2;
  wm->add_option("--mu", wm_mu, "column heights")->required();
  wm->add_option("--r", wm_r, "number of nodes")->capture_default_str();

  // verify
  std::string vf_suite;
  int vf_max_n = -1, vf_max_r = -1;
  std::string suites_help = "suite name or 'all':";
  for (const auto& s : qks::suite_names()) suites_help += " " + s;
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->fallthrough();
  vf->add_option("suite", vf_suite, suites_help)->required();
  vf->add_option("--max-n", vf_max_n, "cell-count bound override");
  vf->add_option("--max-r", vf_max_r, "node-count bound override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(ks)) return run_ks(g, ks_r, ks_i1, ks_mu, ks_eta, ks_method);
    if (app.got_subcommand(ch)) return run_charge(g, ch_mu, ch_eta, ch_word);
    if (app.got_subcommand(ro)) return run_rotate(g, ro_mu, ro_eta, ro_word, ro_steps);
    if (app.got_subcommand(tx)) {
      bool any_target = false;
      for (int k = 0; k < kMaxNodes; ++k) {
        tx_shape_given[k] = tx_shape_opt[k]->count() > 0;
        tx_target_given[k] = tx_target_opt[k]->count() > 0;
        any_target = any_target || tx_target_given[k];
      }
      const bool lr_mode = tx_mu_opt->count() > 0 || tx_eta_opt->count() > 0;
      return run_tableaux(g, tx_r, tx_shape, tx_shape_given, lr_mode, tx_mu, tx_eta, tx_i1,
                          any_target, tx_target, tx_target_given);
    }
    if (app.got_subcommand(ca)) {
      for (int k = 0; k < kMaxNodes; ++k) ca_tab_given[k] = ca_tab_opt[k]->count() > 0;
      return run_catabolize(g, ca_tab, ca_tab_given, ca_node_opt->count() > 0, ca_node, ca_p,
                            ca_strip_opt->count() > 0, ca_strip);
    }
    if (app.got_subcommand(wr)) {
      if (wr->got_subcommand(wi)) return run_wreath_induction(g, wi_n, wi_r, wi_module);
      return run_wreath_rmu(g, wm_mu, wm_r);
    }
    if (app.got_subcommand(vf)) return run_verify(g, vf_suite, vf_max_n, vf_max_r);
  } catch (const qks::integrity_error& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
