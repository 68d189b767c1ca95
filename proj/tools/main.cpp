// avoidlab command line tool: the completion bijection on 132-avoiding
// permutations, class enumeration, decreasing-tree dumps, closed-form
// sequences, and the machine-checked claim catalog.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "avoidlab/bijection.hpp"
#include "avoidlab/binary_tree.hpp"
#include "avoidlab/enumerate.hpp"
#include "avoidlab/errors.hpp"
#include "avoidlab/permutation.hpp"
#include "avoidlab/verify.hpp"

namespace {

using namespace avoidlab;
using nlohmann::ordered_json;

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitGuard = 4;

enum class Format { plain, json, csv };

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw CLI::ValidationError("--format", "expected plain, json or csv");
}

ordered_json perm_json(const Permutation& w) {
  ordered_json arr = ordered_json::array();
  for (int v : w.entries()) arr.push_back(v);
  return arr;
}

// Digit notation when the input used it and the value still fits; otherwise
// comma-separated.
std::string render_like_input(const Permutation& w, bool input_was_digits) {
  if (input_was_digits && w.size() <= 9) return w.str();
  std::string out;
  for (size_t i = 0; i < w.entries().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.entries()[i]);
  }
  return out;
}

struct GuardSettings {
  int max_n = -1;        // AVOIDLAB_MAX_N / --guard-max-n; -1 = unset
  int full_scan = -1;    // --guard-full-scan
  int structural = -1;   // --guard-structural
  bool acknowledged = false;

  Guards resolve() const {
    const Guards defaults{};
    Guards g = defaults;
    if (max_n >= 0) {
      g.structural_max = max_n;
      g.full_scan_max = std::min(defaults.full_scan_max, max_n);
    }
    if (full_scan >= 0) g.full_scan_max = full_scan;
    if (structural >= 0) g.structural_max = structural;
    if ((g.full_scan_max > defaults.full_scan_max ||
         g.structural_max > defaults.structural_max) &&
        !acknowledged) {
      throw GuardError("raised guards need --ack-guards");
    }
    return g;
  }
};

std::vector<Pattern> parse_avoid_list(const std::vector<std::string>& specs) {
  std::vector<Pattern> patterns;
  for (const std::string& spec : specs) {
    size_t start = 0;
    while (start <= spec.size()) {
      size_t end = spec.find(',', start);
      if (end == std::string::npos) end = spec.size();
      const std::string token = spec.substr(start, end - start);
      if (token.empty()) {
        throw ValidationError("--avoid lists digit-form patterns separated by commas");
      }
      patterns.push_back(parse_permutation(token));
      if (end == spec.size()) break;
      start = end + 1;
    }
  }
  return patterns;
}

int cmd_phi(const std::string& text, bool inverse, Format format) {
  const bool digits = text.find(',') == std::string::npos;
  const Permutation input = parse_permutation(text);
  const Permutation output = inverse ? phi_inverse(input) : phi(input);
  if (format == Format::json) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "phi";
    doc["inverse"] = inverse;
    doc["input"] = perm_json(input);
    doc["output"] = perm_json(output);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render_like_input(output, digits) << "\n";
  }
  return 0;
}

int cmd_tree(const std::string& text, bool with_completion, Format format) {
  const Permutation input = parse_permutation(text);
  const LabeledBinaryTree tree = build_decreasing_tree(input);
  std::optional<LabeledBinaryTree> completed;
  if (with_completion) {
    completed = canonical_label(complete(erase_labels(tree)));
  }
  if (format == Format::json) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "tree";
    doc["input"] = perm_json(input);
    doc["tree"] = nlohmann::json::parse(tree.to_json());
    if (completed) doc["completed"] = nlohmann::json::parse(completed->to_json());
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << tree.to_paren() << "\n";
    if (completed) std::cout << completed->to_paren() << "\n";
  }
  return 0;
}

struct EnumerateRequest {
  int length = 0;
  bool alternating = false;
  bool count_only = false;
  bool raw = false;
  std::vector<Pattern> avoid;
};

int cmd_enumerate(const EnumerateRequest& req, Format format, const Guards& guards) {
  const Pattern& p132 = pattern_132();
  const bool has_132 =
      std::find(req.avoid.begin(), req.avoid.end(), p132) != req.avoid.end();
  const bool structural = !req.raw && has_132;

  std::vector<Pattern> extras;
  for (const Pattern& p : req.avoid) {
    if (structural && p == p132) continue;
    if (structural && contains(p, p132)) {
      std::cerr << "notice: pattern " << p.str()
                << " contains 132; avoiding it is implied and it was dropped\n";
      continue;
    }
    extras.push_back(p);
  }

  std::int64_t count = 0;
  std::vector<Permutation> items;
  const bool keep_items = !req.count_only;

  auto take = [&](const Permutation& w) {
    ++count;
    if (keep_items) items.push_back(w);
  };

  if (structural) {
    if (req.count_only) {
      count = req.alternating ? count_a(req.length, extras, guards).value
                              : count_s(req.length, extras, guards).value;
    } else if (!req.alternating) {
      AvoiderStream stream(req.length, guards);
      while (auto w = stream.next()) {
        if (avoids_all(*w, extras)) take(*w);
      }
    } else if (req.length % 2 == 1) {
      AlternatingAvoiderStream stream(req.length, guards);
      while (auto v = stream.next()) {
        if (avoids_all(*v, extras)) take(*v);
      }
    } else {
      // Even length: shrink the odd class one size up; order is preserved.
      AlternatingAvoiderStream stream(req.length + 1, guards);
      while (auto v = stream.next()) {
        const Permutation u = shrink_odd_to_even(*v);
        if (avoids_all(u, extras)) take(u);
      }
    }
  } else {
    PermutationStream stream(req.length, guards);
    while (auto w = stream.next()) {
      if (req.alternating && !is_alternating(*w)) continue;
      if (!avoids_all(*w, req.avoid)) continue;
      take(*w);
    }
  }

  if (format == Format::json) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "enumerate";
    doc["length"] = req.length;
    doc["alternating"] = req.alternating;
    ordered_json avoid = ordered_json::array();
    for (const Pattern& p : req.avoid) avoid.push_back(p.str());
    doc["avoid"] = std::move(avoid);
    doc["raw"] = req.raw;
    doc["count"] = count;
    if (keep_items) {
      ordered_json arr = ordered_json::array();
      for (const Permutation& w : items) arr.push_back(perm_json(w));
      doc["items"] = std::move(arr);
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (req.count_only) {
    std::cout << count << "\n";
    return 0;
  }
  for (const Permutation& w : items) {
    if (format == Format::csv) {
      for (size_t i = 0; i < w.entries().size(); ++i) {
        if (i) std::cout << ',';
        std::cout << w.entries()[i];
      }
      std::cout << "\n";
    } else {
      std::cout << w.str() << "\n";
    }
  }
  return 0;
}

int cmd_sequence(const std::string& family_name, int terms, Format format) {
  const auto family = sequence_family_from_name(family_name);
  if (!family) {
    throw ValidationError("unknown sequence family '" + family_name +
                          "'; expected catalan, pow2-ceiling, even-fibonacci or "
                          "quadratic");
  }
  if (terms < 0) throw ValidationError("--terms must be non-negative");
  const int start = sequence_first_index(*family);
  std::vector<std::int64_t> values;
  for (int i = 0; i < terms; ++i) {
    values.push_back(closed_form({*family}, start + i));
  }
  if (format == Format::json) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "sequence";
    doc["family"] = std::string(sequence_family_name(*family));
    doc["start"] = start;
    doc["terms"] = values;
    std::cout << doc.dump(2) << "\n";
  } else if (format == Format::csv) {
    for (size_t i = 0; i < values.size(); ++i) {
      std::cout << start + static_cast<int>(i) << "," << values[i] << "\n";
    }
  } else {
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << values[i];
    }
    std::cout << "\n";
  }
  return 0;
}

struct VerifyRequest {
  std::string suite = "all";
  std::optional<int> max_n;
  std::optional<int> k;
  bool timings = false;
  bool selftest_corrupt = false;
};

int cmd_verify(const VerifyRequest& req, Format format, const Guards& guards) {
  VerifyConfig config;
  config.guards = guards;
  config.selftest_corrupt = req.selftest_corrupt;
  if (req.max_n) {
    const int n = *req.max_n;
    config.bijection_n_max = n;
    config.transport_n_max = n;
    config.theorem_n_max = n;
    config.corollary_n_max = n;
    config.parity_n_max = n;
    config.recursion_n_max = n;
    config.recursion_stream_n_max = std::min(n, config.recursion_stream_n_max);
    config.recursion_a_m_max = 2 * n + 1;
  }

  std::vector<ClaimReport> reports;
  if (req.suite == "all") {
    reports = run_all(config);
  } else if (req.suite == "bijection") {
    reports.push_back(verify_bijection(config.bijection_n_max, guards));
  } else if (req.suite == "transport") {
    reports.push_back(verify_transport(config.transport_n_max,
                                       req.k.value_or(config.transport_k_max), guards));
  } else if (req.suite == "theorem") {
    reports.push_back(verify_theorem_catalog(config.theorem_n_max, guards));
  } else if (req.suite == "corollary-12k" || req.suite == "corollary-21k" ||
             req.suite == "corollary-k21") {
    const CorollaryFamily family = req.suite == "corollary-12k"
                                       ? CorollaryFamily::k12
                                       : (req.suite == "corollary-21k"
                                              ? CorollaryFamily::k21x
                                              : CorollaryFamily::xk21);
    std::vector<int> ks;
    if (req.k) {
      ks.push_back(*req.k);
    } else if (family == CorollaryFamily::k12) {
      ks = {1, 2, 3, 4};
    } else {
      ks = {2, 3};
    }
    for (int k : ks) {
      reports.push_back(verify_corollary(family, k, config.corollary_n_max, guards));
    }
  } else if (req.suite == "parity") {
    std::vector<Pattern> samples;
    for (int len = 1; len <= 4; ++len) {
      PermutationStream stream(len, guards);
      while (auto p = stream.next()) samples.push_back(std::move(*p));
    }
    reports.push_back(verify_parity(config.parity_n_max, samples, guards));
  } else if (req.suite == "recursions") {
    reports.push_back(verify_recursion_s(config.recursion_n_max,
                                         config.recursion_stream_n_max, guards));
    reports.push_back(verify_recursion_a(config.recursion_a_m_max, guards));
  } else {
    throw CLI::ValidationError(
        "--suite", "expected all, bijection, transport, theorem, corollary-12k, "
                   "corollary-21k, corollary-k21, parity or recursions");
  }

  if (format == Format::json) {
    std::cout << reports_to_json(reports, req.timings) << "\n";
  } else {
    std::cout << reports_to_table(reports, req.timings);
  }
  return all_pass(reports) ? 0 : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"132-avoiding permutations, their alternating companions, and the "
               "machine-checked claims connecting them"};
  app.require_subcommand(1);

  GuardSettings guard_settings;
  app.add_option("--guard-max-n", guard_settings.max_n,
                 "Cap every enumeration at this length (env: AVOIDLAB_MAX_N)")
      ->envname("AVOIDLAB_MAX_N");
  app.add_option("--guard-full-scan", guard_settings.full_scan,
                 "Full factorial-scan guard (default 10)");
  app.add_option("--guard-structural", guard_settings.structural,
                 "Structural generation guard (default 16)");
  app.add_flag("--ack-guards", guard_settings.acknowledged,
               "Acknowledge guards raised above their defaults");

  std::string phi_input;
  bool phi_inverse_flag = false;
  std::string phi_format = "plain";
  CLI::App* phi_cmd = app.add_subcommand("phi", "Apply the completion bijection");
  phi_cmd->add_option("permutation", phi_input, "Permutation in one-line notation")
      ->required();
  phi_cmd->add_flag("--inverse", phi_inverse_flag, "Apply the inverse map");
  phi_cmd->add_option("--format", phi_format, "plain or json");
  phi_cmd->fallthrough();

  std::string tree_input;
  bool tree_complete = false;
  std::string tree_format = "plain";
  CLI::App* tree_cmd = app.add_subcommand("tree", "Dump the decreasing tree");
  tree_cmd->add_option("permutation", tree_input, "Permutation in one-line notation")
      ->required();
  tree_cmd->add_flag("--complete", tree_complete,
                     "Also dump the completion with canonical labels");
  tree_cmd->add_option("--format", tree_format, "plain or json");
  tree_cmd->fallthrough();

  EnumerateRequest enum_req;
  std::vector<std::string> enum_avoid;
  std::string enum_format = "plain";
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "List or count a class");
  enum_cmd->add_option("--length", enum_req.length, "Permutation length")->required();
  enum_cmd->add_flag("--alternating", enum_req.alternating,
                     "Restrict to alternating permutations");
  enum_cmd->add_option("--avoid", enum_avoid,
                       "Comma-separated digit-form patterns (repeatable)");
  enum_cmd->add_flag("--count-only", enum_req.count_only, "Print only the count");
  enum_cmd->add_flag("--raw", enum_req.raw,
                     "Brute-force the full factorial class (for cross-checks)");
  enum_cmd->add_option("--format", enum_format, "plain, json or csv");
  enum_cmd->fallthrough();

  std::string seq_family;
  int seq_terms = 0;
  std::string seq_format = "plain";
  CLI::App* seq_cmd = app.add_subcommand("sequence", "Print closed-form sequence terms");
  seq_cmd->add_option("--family", seq_family,
                      "catalan, pow2-ceiling, even-fibonacci or quadratic")
      ->required();
  seq_cmd->add_option("--terms", seq_terms, "Number of terms")->required();
  seq_cmd->add_option("--format", seq_format, "plain, json or csv");
  seq_cmd->fallthrough();

  VerifyRequest verify_req;
  std::string verify_format = "plain";
  int verify_max_n = -1;
  int verify_k = -1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the claim catalog");
  verify_cmd->add_option("--suite", verify_req.suite, "Claim suite (default: all)");
  verify_cmd->add_option("--max-n", verify_max_n, "Override the suite bound");
  verify_cmd->add_option("--k", verify_k, "Corollary family parameter");
  verify_cmd->add_flag("--timings", verify_req.timings, "Include elapsed milliseconds");
  verify_cmd
      ->add_flag("--selftest-corrupt", verify_req.selftest_corrupt,
                 "Corrupt one oracle to prove failures are reported")
      ->group("");
  verify_cmd->add_option("--format", verify_format, "plain or json");
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (phi_cmd->parsed()) {
      const Format format = parse_format(phi_format);
      if (format == Format::csv) {
        throw CLI::ValidationError("--format", "csv applies to enumerations and "
                                               "sequence terms only");
      }
      return cmd_phi(phi_input, phi_inverse_flag, format);
    }
    if (tree_cmd->parsed()) {
      const Format format = parse_format(tree_format);
      if (format == Format::csv) {
        throw CLI::ValidationError("--format", "csv applies to enumerations and "
                                               "sequence terms only");
      }
      return cmd_tree(tree_input, tree_complete, format);
    }
    if (enum_cmd->parsed()) {
      enum_req.avoid = parse_avoid_list(enum_avoid);
      return cmd_enumerate(enum_req, parse_format(enum_format), guard_settings.resolve());
    }
    if (seq_cmd->parsed()) {
      return cmd_sequence(seq_family, seq_terms, parse_format(seq_format));
    }
    if (verify_cmd->parsed()) {
      const Format format = parse_format(verify_format);
      if (format == Format::csv) {
        throw CLI::ValidationError("--format", "csv applies to enumerations and "
                                               "sequence terms only");
      }
      if (verify_max_n >= 0) verify_req.max_n = verify_max_n;
      if (verify_k >= 0) verify_req.k = verify_k;
      return cmd_verify(verify_req, format, guard_settings.resolve());
    }
    std::cerr << "error: no command\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
