#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kerovlab/characters.hpp"
#include "kerovlab/errors.hpp"
#include "kerovlab/irrorder.hpp"
#include "kerovlab/ncpart.hpp"
#include "kerovlab/perms.hpp"
#include "kerovlab/symfunc.hpp"

namespace kerovlab::cli {

using nlohmann::json;

namespace {

constexpr int kMaxPosetN = 10;
constexpr int kMaxCayleyK = 8;
constexpr int kMaxVerifyN = 10;

struct Options {
  std::string format = "text";
  std::string output;

  int k = 0;
  std::string method = "irr";

  int max_n = 0;
  int max_k = 0;

  std::string mu;
  std::string basis = "m";

  int n = 0;
  std::string order = "refinement";

  std::string lambda;
  int terms = 8;
};

json partition_json(const IntegerPartition& p) { return json(p.parts()); }

json document(const std::string& command, json parameters, json payload) {
  return json{{"format", kFormatVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"payload", std::move(payload)}};
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw std::domain_error("unsupported --format '" + format + "'");
}

// Each command renders into a string; `failed` flips the exit code to the
// consistency code while still printing the full report.
struct Rendered {
  std::string text;
  int code = kOk;
};

Rendered cmd_sigma(const Options& o, std::ostream& err) {
  require_format(o.format, {"text", "json"});
  if (o.k < 1 || o.k > kMaxSigmaK)
    throw SizeLimitError("sigma requires 1 <= k <= " + std::to_string(kMaxSigmaK));
  std::optional<KerovPolynomial> result;
  if (o.method == "all") {
    std::vector<KerovMethod> methods{KerovMethod::irr, KerovMethod::nc, KerovMethod::stanley};
    if (o.k <= kMaxBooleanK) methods.push_back(KerovMethod::boolean);
    std::vector<std::pair<KerovMethod, KerovPolynomial>> all;
    for (auto m : methods) all.emplace_back(m, sigma(o.k, m));
    bool agree = true;
    for (const auto& [m, p] : all) agree &= p == all.front().second;
    if (!agree) {
      err << "methods disagree for k = " << o.k << ":\n";
      for (const auto& [m, p] : all) err << "  " << method_name(m) << ": " << p.to_string() << '\n';
      return {"", kConsistency};
    }
    result = all.front().second;
  } else {
    const KerovMethod m = parse_method(o.method);
    if (m == KerovMethod::boolean && o.k > kMaxBooleanK)
      throw SizeLimitError("the boolean route requires k <= " + std::to_string(kMaxBooleanK));
    result = sigma(o.k, m);
  }
  if (o.format == "text") return {result->to_string() + "\n"};
  json payload = kerov_to_json(*result);
  return {document("sigma", {{"k", o.k}, {"method", o.method}}, payload).dump(2) + "\n"};
}

Rendered cmd_verify(const Options& o) {
  require_format(o.format, {"text", "json"});
  if (o.max_n < 1 || o.max_n > kMaxVerifyN)
    throw SizeLimitError("verify requires 1 <= max-n <= " + std::to_string(kMaxVerifyN));
  const KerovMethod method = parse_method(o.method);
  int top_k = std::min(o.max_n, kMaxSigmaK);
  if (o.max_k > 0) top_k = std::min(top_k, o.max_k);
  if (method == KerovMethod::boolean) top_k = std::min(top_k, kMaxBooleanK);

  std::vector<KerovPolynomial> sigmas;
  for (int k = 1; k <= top_k; ++k) sigmas.push_back(sigma(k, method));

  std::ostringstream text;
  json rows = json::array();
  bool all_ok = true;
  text << "lambda\tk\tlhs\trhs\tok\n";
  for (int n = 1; n <= o.max_n; ++n) {
    for (const auto& lambda : integer_partitions(n)) {
      for (int k = 1; k <= std::min(n, top_k); ++k) {
        const KerovCheck check = check_kerov(lambda, sigmas[static_cast<std::size_t>(k - 1)]);
        all_ok &= check.ok();
        text << '(' << lambda.to_string() << ")\t" << k << '\t' << check.lhs.get_str() << '\t'
             << check.rhs.get_str() << '\t' << (check.ok() ? "ok" : "MISMATCH") << '\n';
        rows.push_back({{"lambda", partition_json(lambda)},
                        {"k", k},
                        {"lhs", check.lhs.get_str()},
                        {"rhs", check.rhs.get_str()},
                        {"ok", check.ok()}});
      }
    }
  }
  const int code = all_ok ? kOk : kConsistency;
  if (o.format == "text") return {text.str(), code};
  json params{{"max_n", o.max_n}, {"max_k", top_k}, {"method", o.method}};
  return {document("verify", params, {{"rows", rows}, {"all_ok", all_ok}}).dump(2) + "\n", code};
}

Rendered cmd_gmu(const Options& o) {
  require_format(o.format, {"text", "json"});
  const IntegerPartition mu = IntegerPartition::parse(o.mu);
  const Basis basis = parse_basis(o.basis);
  const SymFunction g = convert_basis(g_mu(mu), basis);
  const int k = mu.size() - 1;
  const Rational at_contents = g.evaluate(content_points(k));
  if (o.format == "text") {
    return {g.to_string() + "\n" + "g(0..." + std::to_string(k - 1) + ") = " +
            at_contents.get_str() + "\n"};
  }
  json terms = json::array();
  for (const auto& [lambda, coeff] : g.coefficients())
    terms.push_back({{"lambda", partition_json(lambda)}, {"coeff", coeff.get_str()}});
  json payload{{"mu", partition_json(mu)},
               {"basis", std::string(1, basis_letter(basis))},
               {"degree", g.degree()},
               {"terms", terms},
               {"expansion", g.to_string()},
               {"specialization", at_contents.get_str()}};
  return {document("gmu", {{"mu", o.mu}, {"basis", o.basis}}, payload).dump(2) + "\n"};
}

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

Rendered graph_output(const std::string& command, const std::string& name, json params,
                      const std::vector<std::string>& nodes,
                      const std::vector<std::pair<std::string, std::string>>& edges,
                      const std::string& format) {
  if (format == "dot") {
    std::ostringstream dot;
    dot << "digraph " << name << " {\n  rankdir=BT;\n";
    for (const auto& v : nodes) dot << "  " << dot_quote(v) << ";\n";
    for (const auto& [a, b] : edges) dot << "  " << dot_quote(a) << " -> " << dot_quote(b) << ";\n";
    dot << "}\n";
    return {dot.str()};
  }
  json edge_list = json::array();
  for (const auto& [a, b] : edges) edge_list.push_back({a, b});
  json payload{{"nodes", nodes}, {"edges", edge_list}};
  return {document(command, std::move(params), payload).dump(2) + "\n"};
}

Rendered cmd_poset(const Options& o) {
  require_format(o.format, {"dot", "json"});
  if (o.n < 1 || o.n > kMaxPosetN)
    throw SizeLimitError("poset requires 1 <= n <= " + std::to_string(kMaxPosetN));
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  if (o.order == "irr") {
    for (const auto& tau : enumerate_nc_irr(o.n)) {
      nodes.push_back(tau.to_string());
      for (const auto& pi : covers(tau)) edges.emplace_back(tau.to_string(), pi.to_string());
    }
  } else if (o.order == "refinement") {
    for (const auto& tau : enumerate_nc(o.n)) {
      nodes.push_back(tau.to_string());
      const auto& blocks = tau.blocks();
      for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
          std::vector<Block> merged;
          for (std::size_t i = 0; i < blocks.size(); ++i)
            if (i != a && i != b) merged.push_back(blocks[i]);
          Block joined = blocks[a];
          joined.insert(joined.end(), blocks[b].begin(), blocks[b].end());
          merged.push_back(std::move(joined));
          if (!is_noncrossing(merged)) continue;
          edges.emplace_back(tau.to_string(), NoncrossingPartition(std::move(merged)).to_string());
        }
      }
    }
  } else {
    throw std::domain_error("unknown --order '" + o.order + "' (expected refinement or irr)");
  }
  std::sort(edges.begin(), edges.end());
  const std::string name = std::string(o.order == "irr" ? "nc_irr_" : "nc_") + std::to_string(o.n);
  return graph_output("poset", name, {{"n", o.n}, {"order", o.order}}, nodes, edges, o.format);
}

std::string cayley_label(const Permutation& w) {
  std::string out;
  for (const auto& c : w.cycles()) {
    if (c.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Rendered cmd_cayley(const Options& o) {
  require_format(o.format, {"dot", "json"});
  if (o.k < 1 || o.k > kMaxCayleyK)
    throw SizeLimitError("cayley requires 1 <= k <= " + std::to_string(kMaxCayleyK));
  std::vector<Permutation> interval;
  for (const auto& tau : enumerate_nc(o.k)) interval.push_back(biane(tau));
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& u : interval) {
    nodes.push_back(cayley_label(u));
    for (const auto& w : interval)
      if (absolute_length(w) == absolute_length(u) + 1 && leq_T(u, w))
        edges.emplace_back(cayley_label(u), cayley_label(w));
  }
  std::sort(edges.begin(), edges.end());
  return graph_output("cayley", "nc_s" + std::to_string(o.k), {{"k", o.k}}, nodes, edges, o.format);
}

Rendered cmd_cumulants(const Options& o) {
  require_format(o.format, {"text", "json"});
  const IntegerPartition lambda = IntegerPartition::parse(o.lambda);
  const auto m = moments(lambda, o.terms);
  const auto r = free_cumulants(lambda, o.terms);
  const auto b = boolean_cumulants(lambda, o.terms);
  if (o.format == "text") {
    std::ostringstream text;
    text << "n\tM_n\tR_n\tB_n\n";
    for (int n = 1; n <= o.terms; ++n) {
      const auto i = static_cast<std::size_t>(n);
      text << n << '\t' << m[i].get_str() << '\t' << r[i].get_str() << '\t' << b[i].get_str() << '\n';
    }
    return {text.str()};
  }
  auto column = [&](const std::vector<Integer>& v) {
    json out = json::array();
    for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i].get_str());
    return out;
  };
  json payload{{"lambda", partition_json(lambda)},
               {"moments", column(m)},
               {"free_cumulants", column(r)},
               {"boolean_cumulants", column(b)}};
  return {document("cumulants", {{"lambda", o.lambda}, {"n", o.terms}}, payload).dump(2) + "\n"};
}

}  // namespace

json kerov_to_json(const KerovPolynomial& sigma) {
  json terms = json::array();
  for (const auto& [mu, coeff] : sigma.sorted_terms())
    terms.push_back({{"mu", partition_json(mu)}, {"coeff", coeff.get_str()}});
  return {{"k", sigma.k()}, {"polynomial", sigma.to_string()}, {"terms", terms}};
}

KerovPolynomial kerov_from_json(const json& payload) {
  try {
    std::map<IntegerPartition, Integer> terms;
    for (const auto& t : payload.at("terms")) {
      Integer coeff;
      if (coeff.set_str(t.at("coeff").get<std::string>(), 10) != 0)
        throw std::domain_error("bad coefficient");
      terms.emplace(IntegerPartition(t.at("mu").get<std::vector<int>>()), coeff);
    }
    return KerovPolynomial(payload.at("k").get<int>(), std::move(terms));
  } catch (const json::exception& e) {
    throw std::domain_error(std::string("malformed Kerov polynomial document: ") + e.what());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kerov polynomials, noncrossing partitions and characters", "kerovlab"};
  app.require_subcommand(1);
  Options o;

  auto* sigma_cmd = app.add_subcommand("sigma", "Compute the Kerov polynomial Sigma_k");
  sigma_cmd->add_option("--k", o.k, "Index k")->required();
  sigma_cmd->add_option("--method", o.method, "irr | nc | stanley | boolean | all")
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check Sigma_k against characters");
  verify_cmd->add_option("--max-n", o.max_n, "Largest |lambda|")->required();
  verify_cmd->add_option("--max-k", o.max_k, "Largest k (default: all)");
  verify_cmd->add_option("--method", o.method, "Route used for Sigma_k")->capture_default_str();

  auto* gmu_cmd = app.add_subcommand("gmu", "Symmetric function g_mu");
  gmu_cmd->add_option("--mu", o.mu, "Partition of k+1, e.g. 3,1,1,1")->required();
  gmu_cmd->add_option("--basis", o.basis, "m | e | h | p | s")->capture_default_str();

  auto* poset_cmd = app.add_subcommand("poset", "Hasse diagram of NC_n or NC_n^irr");
  poset_cmd->add_option("--n", o.n, "Ground set size")->required();
  poset_cmd->add_option("--order", o.order, "refinement | irr")->capture_default_str();

  auto* cayley_cmd = app.add_subcommand("cayley", "The interval [id_k, c_k] in absolute order");
  cayley_cmd->add_option("--k", o.k, "Size k")->required();

  auto* cumulants_cmd = app.add_subcommand("cumulants", "Moments and cumulants of a diagram");
  cumulants_cmd->add_option("--lambda", o.lambda, "Young diagram, e.g. 3,2")->required();
  cumulants_cmd->add_option("--n", o.terms, "Number of terms")->capture_default_str();

  for (auto* sub : {sigma_cmd, verify_cmd, gmu_cmd, cumulants_cmd}) {
    sub->add_option("--format", o.format, "text | json")->capture_default_str();
    sub->add_option("--output", o.output, "Write to this file instead of stdout");
  }
  for (auto* sub : {poset_cmd, cayley_cmd}) {
    sub->add_option("--format", o.format, "dot | json");
    sub->add_option("--output", o.output, "Write to this file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Rendered result;
  try {
    if (*sigma_cmd) {
      result = cmd_sigma(o, err);
    } else if (*verify_cmd) {
      result = cmd_verify(o);
    } else if (*gmu_cmd) {
      result = cmd_gmu(o);
    } else if (*poset_cmd) {
      if (o.format == "text") o.format = "dot";
      result = cmd_poset(o);
    } else if (*cayley_cmd) {
      if (o.format == "text") o.format = "dot";
      result = cmd_cayley(o);
    } else if (*cumulants_cmd) {
      result = cmd_cumulants(o);
    }
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (o.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.output << '\n';
      return kUsage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace kerovlab::cli
