#include "coxcent/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "coxcent/catalog.hpp"
#include "coxcent/finite.hpp"
#include "coxcent/group.hpp"
#include "coxcent/involution.hpp"

namespace coxcent::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string type;
  std::string matrix_file;
  std::string word;
  std::string suite;
  std::size_t max_order = kDefaultEnumerationCap;
  bool pretty = false;
};

/// Failure that still has a JSON payload worth printing.
struct ReportedFailure {
  json report;
  int code;
};

CoxeterMatrix load_system(const Options& opts) {
  if (!opts.type.empty() == !opts.matrix_file.empty()) {
    throw Error("exactly one of --type and --matrix is required");
  }
  if (!opts.type.empty()) return catalog_matrix(opts.type);
  std::ifstream in(opts.matrix_file);
  if (!in) throw Error("cannot open matrix file '" + opts.matrix_file + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("matrix file '" + opts.matrix_file + "' is not valid JSON: " + e.what());
  }
  return parse_matrix_json(doc);
}

json certificate_json(const InvolutionCertificate& cert, const CertificateCheck& check,
                      const ContextPtr& ctx) {
  json steps = json::array();
  for (Generator s : cert.steps) steps.push_back(s + 1);
  json out;
  out["I"] = to_one_based(cert.I);
  out["u"] = format_word(cert.u.word());
  out["rho_I_word"] =
      check.minus_one_type ? json(format_word(longest_element(cert.I, ctx).word())) : json(nullptr);
  out["steps"] = std::move(steps);
  out["checks"] = {{"minus_one_type", check.minus_one_type},
                   {"conjugation_exact", check.conjugation_exact}};
  return out;
}

json word_list(const std::vector<GroupElement>& elements) {
  json out = json::array();
  for (const auto& g : elements) out.push_back(format_word(g.word()));
  return out;
}

// Infinite diagrams are rejected up front; a BFS would only stop at the cap.
FiniteGroup enumerate_finite(const ContextPtr& ctx, std::size_t cap) {
  if (!is_finite_parabolic(GeneratorSet::all(ctx->rank()), *ctx)) throw CapExceeded(cap);
  return enumerate_group(ctx, cap);
}

GroupElement read_involution(const ContextPtr& ctx, const Options& opts) {
  const GroupElement w = normal_form(ctx, parse_word(opts.word, ctx->rank()));
  if (!is_involution(w)) {
    json report = {{"error", "not an involution"},
                   {"w", format_word(w.word())},
                   {"w_squared", format_word(multiply(w, w).word())}};
    throw ReportedFailure{std::move(report), kExitError};
  }
  return w;
}

int cmd_reduce(const ContextPtr& ctx, const Options& opts, json& report) {
  const GroupElement w = normal_form(ctx, parse_word(opts.word, ctx->rank()));
  report = {{"input", opts.word},
            {"normal_form", format_word(w.word())},
            {"length", w.length()},
            {"right_descents", to_one_based(right_descents(w))},
            {"left_descents", to_one_based(left_descents(w))}};
  return kExitOk;
}

int cmd_involution_nf(const ContextPtr& ctx, const Options& opts, json& report) {
  const GroupElement w = read_involution(ctx, opts);
  const InvolutionCertificate cert = richardson_descent(w);
  const CertificateCheck check = check_certificate(w, cert);
  report = certificate_json(cert, check, ctx);
  report["w"] = format_word(w.word());
  return check.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_centralizer(const ContextPtr& ctx, const Options& opts, json& report) {
  const GroupElement w = read_involution(ctx, opts);
  const InvolutionCertificate cert = richardson_descent(w);
  const CertificateCheck check = check_certificate(w, cert);
  report["certificate"] = certificate_json(cert, check, ctx);
  std::optional<FiniteGroup> group;
  try {
    group.emplace(enumerate_finite(ctx, opts.max_order));
  } catch (const CapExceeded& e) {
    report["error"] = std::string(e.what()) +
                      "; only the certificate (I, u) is available for infinite or large groups";
    throw ReportedFailure{std::move(report), kExitError};
  }
  if (!check.ok()) {
    report["error"] = "certificate failed verification";
    return kExitCheckFailed;
  }
  const GroupElement u_inv = inverse(cert.u);
  std::vector<GroupElement> conjugated;
  const ElementSet normal = normalizer(cert.I, *group);
  for (const auto& g : normal.elements()) {
    conjugated.push_back(multiply(multiply(u_inv, g), cert.u));
  }
  const ElementSet via_normalizer(std::move(conjugated), true);
  const ElementSet brute = centralizer(w, *group);
  const bool match = via_normalizer == brute;
  report["centralizer_order"] = via_normalizer.size();
  report["centralizer_elements"] = word_list(via_normalizer.elements());
  report["via"] = "conjugated-normalizer";
  report["brute_force_match"] = match;
  return match ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const ContextPtr& ctx, const Options& opts, json& report) {
  static const std::vector<std::string> suites{"prop1", "prop2", "main", "classes"};
  if (std::find(suites.begin(), suites.end(), opts.suite) == suites.end()) {
    throw Error("unknown suite '" + opts.suite + "' (expected prop1, prop2, main or classes)");
  }
  FiniteGroup group = enumerate_finite(ctx, opts.max_order);
  json failures = json::array();
  std::size_t checked = 0;
  report["suite"] = opts.suite;
  report["group_order"] = group.size();

  if (opts.suite == "prop1") {
    for (const auto& w : involutions(group)) {
      ++checked;
      try {
        const auto cert = richardson_descent(w);
        if (!check_certificate(w, cert).ok()) {
          failures.push_back({{"w", format_word(w.word())}, {"reason", "certificate rejected"}});
        }
      } catch (const InvariantViolation& e) {
        failures.push_back({{"w", format_word(w.word())}, {"reason", e.what()}});
      }
    }
  } else if (opts.suite == "prop2") {
    for (GeneratorSet I : minus_one_type_subsets(ctx)) {
      ++checked;
      if (!verify_prop2(I, group)) failures.push_back({{"I", to_one_based(I)}});
    }
  } else if (opts.suite == "main") {
    for (const auto& w : involutions(group)) {
      ++checked;
      if (!verify_main_identity(w, group)) failures.push_back({{"w", format_word(w.word())}});
    }
  } else {
    const auto classes = involution_classes(group);
    json listed = json::array();
    std::size_t total = 0;
    for (const auto& cls : classes) {
      ++checked;
      total += cls.members.size();
      const std::size_t centralizer_order = centralizer(cls.representative, group).size();
      const bool orbit_ok = centralizer_order * cls.members.size() == group.size();
      if (!cls.certificate.verification.ok() || !cls.contains_rho || !orbit_ok) {
        failures.push_back({{"representative", format_word(cls.representative.word())}});
      }
      listed.push_back({{"representative", format_word(cls.representative.word())},
                        {"size", cls.members.size()},
                        {"I", to_one_based(cls.certificate.I)},
                        {"u", format_word(cls.certificate.u.word())}});
    }
    if (total != involutions(group).size()) {
      failures.push_back({{"reason", "classes do not partition the involutions"}});
    }
    report["classes"] = std::move(listed);
  }
  report["instances_checked"] = checked;
  const bool ok = failures.empty();
  report["failures"] = std::move(failures);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

CoxeterMatrix parse_matrix_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("rank") || !doc.contains("m")) {
    throw Error("matrix document must be an object with \"rank\" and \"m\"");
  }
  if (!doc["rank"].is_number_unsigned()) throw Error("\"rank\" must be a positive integer");
  const auto rank = doc["rank"].get<std::size_t>();
  const json& m = doc["m"];
  if (!m.is_array() || m.size() != rank) {
    throw Error("\"m\" must be an array of " + std::to_string(rank) + " rows");
  }
  std::vector<std::vector<BondLabel>> rows;
  for (const auto& row : m) {
    if (!row.is_array()) throw Error("\"m\" rows must be arrays");
    std::vector<BondLabel> labels;
    for (const auto& x : row) {
      if (!x.is_number_unsigned()) throw Error("Coxeter labels must be non-negative integers");
      labels.push_back(x.get<BondLabel>());
    }
    rows.push_back(std::move(labels));
  }
  return CoxeterMatrix(std::move(rows));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Richardson certificates and centralizers of involutions in Coxeter groups",
               "coxcent"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    auto* type = sub->add_option("--type", opts.type,
                                 "Named type: A<n>, B<n>, D<n>, E6-8, F4, H3, H4, I2(<m>), Atilde<n>");
    auto* matrix = sub->add_option("--matrix", opts.matrix_file,
                                   "JSON file {\"rank\": n, \"m\": [[...]]}, 0 = infinity");
    type->excludes(matrix);
    sub->add_flag("--json", opts.pretty, "Indent the JSON output");
  };
  auto* reduce = app.add_subcommand("reduce", "ShortLex normal form, length and descents");
  auto* involution_nf =
      app.add_subcommand("involution-nf", "Certificate (I, u) with u w u^-1 = rho_I");
  auto* central = app.add_subcommand("centralizer", "Centralizer of an involution");
  auto* verify = app.add_subcommand("verify", "Exhaustive checks on a finite group");
  for (auto* sub : {reduce, involution_nf, central, verify}) add_common(sub);
  for (auto* sub : {reduce, involution_nf, central}) {
    sub->add_option("--word", opts.word, "Whitespace-separated 1-based generator indices");
  }
  for (auto* sub : {central, verify}) {
    sub->add_option("--max-order", opts.max_order, "Enumeration cap")
        ->check(CLI::PositiveNumber);
  }
  verify->add_option("--suite", opts.suite, "prop1, prop2, main or classes")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  const auto emit = [&](const json& report) {
    out << (opts.pretty ? report.dump(2) : report.dump()) << '\n';
  };
  try {
    const ContextPtr ctx = CoxeterContext::create(load_system(opts));
    json report;
    int code = kExitOk;
    if (reduce->parsed()) code = cmd_reduce(ctx, opts, report);
    else if (involution_nf->parsed()) code = cmd_involution_nf(ctx, opts, report);
    else if (central->parsed()) code = cmd_centralizer(ctx, opts, report);
    else code = cmd_verify(ctx, opts, report);
    emit(report);
    return code;
  } catch (const ReportedFailure& failure) {
    err << "coxcent: " << failure.report.value("error", std::string("failed")) << '\n';
    emit(failure.report);
    return failure.code;
  } catch (const std::exception& e) {
    err << "coxcent: " << e.what() << '\n';
    emit(json{{"error", e.what()}});
    return kExitError;
  }
}

}  // namespace coxcent::cli
