// Command-line front end: Stirling/r-Stirling triangles, the poly-Cauchy
// sequence family, sequence transforms, and the identity verifier.
//
// Exit codes: 0 success / all identities pass, 1 identity failure,
// 2 usage error, 3 input parse error.

#include "polycauchy/binomial.hpp"
#include "polycauchy/identities.hpp"
#include "polycauchy/polynomial.hpp"
#include "polycauchy/sequence_io.hpp"
#include "polycauchy/sequences.hpp"
#include "polycauchy/stirling.hpp"
#include "polycauchy/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace polycauchy;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct SequenceOutput {
  std::vector<std::string> tokens;   // canonical rationals, or "?" placeholders
  std::vector<Rational> values;      // parallel to tokens where determined
  std::vector<bool> determined;
  long long offset = 0;              // absolute index of the first token
  json meta;                         // extra fields for JSON mode
};

void render_sequence(const SequenceOutput& seq, const std::string& format,
                     std::optional<long long> bfile_offset, std::ostream& os) {
  if (format == "text") {
    for (const auto& t : seq.tokens) os << t << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < seq.tokens.size(); ++i)
      os << seq.offset + static_cast<long long>(i) << "," << seq.tokens[i] << "\n";
  } else if (format == "json") {
    json j = seq.meta;
    j["offset"] = seq.offset;
    j["terms"] = seq.tokens;
    os << j.dump(2) << "\n";
  } else if (format == "bfile") {
    for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
      if (!seq.determined[i])
        throw UsageError("b-file output requires fully determined terms");
      if (!seq.values[i].is_integer())
        throw UsageError("b-file output is only available for integer sequences (term " +
                         std::to_string(i) + " is " + seq.tokens[i] + ")");
    }
    long long start = bfile_offset.value_or(seq.offset);
    for (std::size_t i = 0; i < seq.tokens.size(); ++i)
      os << start + static_cast<long long>(i) << " " << seq.tokens[i] << "\n";
  } else {
    throw UsageError("unsupported format: " + format);
  }
}

SequenceOutput make_output(const std::vector<Rational>& values, long long offset) {
  SequenceOutput out;
  out.offset = offset;
  for (const Rational& v : values) {
    out.tokens.push_back(v.str());
    out.values.push_back(v);
    out.determined.push_back(true);
  }
  return out;
}

int run_table(const std::string& kind, int r, int n_max, const std::string& format,
              std::ostream& os) {
  StirlingKind sk = kind == "stirling1" ? StirlingKind::first : StirlingKind::second;
  if (format == "bfile")
    throw UsageError("b-file output applies to sequences, not triangles");
  if (format == "json") {
    json rows = json::array();
    for (int n = r; n <= n_max; ++n) {
      json row = json::array();
      for (int m = r; m <= n; ++m) row.push_back(r_stirling(sk, n, m, r).str());
      rows.push_back(row);
    }
    json j{{"kind", kind}, {"r", r}, {"n_max", n_max}, {"rows", rows}};
    os << j.dump(2) << "\n";
    return 0;
  }
  for (int n = r; n <= n_max; ++n) {
    if (format == "csv") {
      for (int m = r; m <= n; ++m)
        os << n << "," << m << "," << r_stirling(sk, n, m, r) << "\n";
    } else {
      os << n << ":";
      for (int m = r; m <= n; ++m) os << " " << r_stirling(sk, n, m, r);
      os << "\n";
    }
  }
  return 0;
}

int run_seq(const std::string& family, int k, int count, const std::string& z_text,
            const std::string& alpha_text, std::optional<long long> bfile_offset,
            const std::string& format, std::ostream& os) {
  bool wants_z = family == "pc1-poly" || family == "pc2-poly";
  bool wants_alpha = family == "pc1-shifted" || family == "pc2-shifted";
  if (wants_z && z_text.empty()) throw UsageError(family + " requires --z");
  if (!wants_z && !z_text.empty()) throw UsageError("--z is only valid for poly families");
  if (wants_alpha && alpha_text.empty()) throw UsageError(family + " requires --alpha");
  if (!wants_alpha && !alpha_text.empty())
    throw UsageError("--alpha is only valid for shifted families");
  if (count < 0) throw UsageError("--count must be nonnegative");

  std::vector<Rational> values;
  long long offset = 0;
  json meta{{"family", family}, {"k", k}};
  if (family == "harmonic") {
    offset = 1;
    for (int n = 1; n <= count; ++n) values.push_back(harmonic(n, k));
  } else {
    PolyCauchyKind kind = family.starts_with("pc1") ? PolyCauchyKind::first
                                                    : PolyCauchyKind::second;
    PolyCauchySpec spec = PolyCauchySpec::number(kind, k);
    if (wants_z) {
      spec = PolyCauchySpec::polynomial(kind, k, Rational::parse(z_text));
      meta["z"] = spec.z.str();
    } else if (wants_alpha) {
      spec = PolyCauchySpec::shifted(kind, k, Rational::parse(alpha_text));
      meta["alpha"] = spec.alpha.str();
    }
    for (int n = 0; n < count; ++n) values.push_back(spec.value(n));
  }
  SequenceOutput out = make_output(values, offset);
  out.meta = std::move(meta);
  render_sequence(out, format, bfile_offset, os);
  return 0;
}

int run_transform(const std::string& kind, std::optional<int> r, bool invert,
                  const std::string& input_path, std::optional<long long> bfile_offset,
                  const std::string& format, std::ostream& os) {
  if (kind == "rstirling" && !r) throw UsageError("rstirling requires --r");
  if (kind != "rstirling" && r) throw UsageError("--r is only valid for rstirling");

  std::vector<Rational> terms;
  if (input_path.empty() || input_path == "-") {
    terms = parse_sequence(std::cin);
  } else {
    std::ifstream in(input_path);
    if (!in) throw UsageError("cannot open input file: " + input_path);
    terms = parse_sequence(in);
  }
  RatSequence a{std::move(terms), 0};
  RatSequence b;
  if (kind == "binomial") b = binomial_transform(a, invert);
  else if (kind == "stirling") b = stirling_transform(a, invert);
  else b = r_stirling_transform(a, *r, invert);

  SequenceOutput out = make_output(b.terms, static_cast<long long>(b.offset));
  // Below index r the inverse r-Stirling transform is mathematically
  // undetermined; mask those positions.
  if (kind == "rstirling" && invert) {
    for (std::size_t i = 0; i < out.tokens.size(); ++i)
      if (static_cast<long long>(i) + out.offset < *r) {
        out.tokens[i] = "?";
        out.determined[i] = false;
      }
  }
  out.meta = json{{"kind", kind}, {"invert", invert}};
  if (r) out.meta["r"] = *r;
  render_sequence(out, format, bfile_offset, os);
  return 0;
}

int run_verify(std::vector<std::string> id_names, bool all, const ParamBox& box,
               const std::string& format, std::ostream& os) {
  if (format != "text" && format != "json")
    throw UsageError("verify supports --format text or json");
  std::vector<IdentityId> ids;
  if (all) {
    ids = all_identities();
  } else {
    if (id_names.empty())
      throw UsageError("verify requires identity ids or --all");
    for (const std::string& name : id_names) {
      auto id = identity_from_string(name);
      if (!id) {
        std::ostringstream msg;
        msg << "unknown identity id '" << name << "'; valid ids:";
        for (IdentityId known : all_identities()) msg << " " << to_string(known);
        throw UsageError(msg.str());
      }
      ids.push_back(*id);
    }
  }

  std::vector<IdentityReport> reports = run_suite(ids, box);
  for (const IdentityReport& rep : reports)
    if (rep.vacuous)
      std::cerr << "warning: " << to_string(rep.id)
                << " checked zero tuples (constraints emptied the box)\n";

  if (format == "json") {
    os << suite_to_json(reports, box).dump(2) << "\n";
  } else {
    for (const IdentityReport& rep : reports) os << report_text(rep) << "\n";
    os << "overall: " << (suite_passes(reports) ? "pass" : "fail") << "\n";
  }
  return suite_passes(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stirling / r-Stirling / poly-Cauchy toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  long long seed = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json", "bfile"}));
  app.add_option("--output", output, "write output to a file instead of stdout");
  app.add_option("--seed", seed, "seed for randomized checks (reserved)");

  auto* table = app.add_subcommand("table", "print a Stirling triangle");
  std::string table_kind;
  int table_r = 0, table_nmax = 0;
  table->add_option("kind", table_kind, "stirling1 or stirling2")
      ->required()
      ->check(CLI::IsMember({"stirling1", "stirling2"}));
  table->add_option("--r", table_r)->check(CLI::NonNegativeNumber);
  table->add_option("--n-max", table_nmax)->required()->check(CLI::NonNegativeNumber);

  auto* seq = app.add_subcommand("seq", "print a sequence from the poly-Cauchy family");
  std::string seq_family, seq_z, seq_alpha;
  int seq_k = 0, seq_count = 0;
  std::optional<long long> seq_offset;
  seq->add_option("family", seq_family)
      ->required()
      ->check(CLI::IsMember(
          {"pc1", "pc2", "pc1-poly", "pc2-poly", "pc1-shifted", "pc2-shifted", "harmonic"}));
  seq->add_option("--k", seq_k, "index k")->required();
  seq->add_option("--count", seq_count, "number of terms")->required();
  seq->add_option("--z", seq_z, "evaluation point for poly families (rational)");
  seq->add_option("--alpha", seq_alpha, "shift for shifted families (positive rational)");
  seq->add_option("--offset", seq_offset, "first index label for b-file output");

  auto* transform = app.add_subcommand("transform", "transform a sequence from stdin/file");
  std::string tr_kind, tr_input;
  std::optional<int> tr_r;
  bool tr_invert = false;
  std::optional<long long> tr_offset;
  transform->add_option("kind", tr_kind)
      ->required()
      ->check(CLI::IsMember({"binomial", "stirling", "rstirling"}));
  transform->add_option("--r", tr_r, "r for the r-Stirling pair");
  transform->add_flag("--invert", tr_invert, "apply the inverse transform");
  transform->add_option("--input", tr_input, "input file ('-' for stdin)");
  transform->add_option("--offset", tr_offset, "first index label for b-file output");

  auto* verify = app.add_subcommand("verify", "check identities over a parameter box");
  std::vector<std::string> verify_ids;
  bool verify_all = false;
  ParamBox box = ParamBox::desk_default();
  std::vector<std::string> q_texts, alpha_texts;
  verify->add_option("ids", verify_ids, "identity ids (see --all for the full list)");
  verify->add_flag("--all", verify_all, "run every identity checker");
  verify->add_option("--n-max", box.n_range.hi);
  verify->add_option("--r-max", box.r_range.hi);
  verify->add_option("--k-min", box.k_range.lo);
  verify->add_option("--k-max", box.k_range.hi);
  verify->add_option("--q", q_texts, "q values for the polynomial identities");
  verify->add_option("--alpha", alpha_texts, "alpha values recorded in the box");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    OutputSink sink(output);
    if (*table) return run_table(table_kind, table_r, table_nmax, format, sink.stream());
    if (*seq)
      return run_seq(seq_family, seq_k, seq_count, seq_z, seq_alpha, seq_offset, format,
                     sink.stream());
    if (*transform)
      return run_transform(tr_kind, tr_r, tr_invert, tr_input, tr_offset, format,
                           sink.stream());
    if (*verify) {
      if (!q_texts.empty()) {
        box.q_values.clear();
        for (const auto& t : q_texts) box.q_values.push_back(Rational::parse(t));
      }
      if (!alpha_texts.empty()) {
        box.alpha_values.clear();
        for (const auto& t : alpha_texts) box.alpha_values.push_back(Rational::parse(t));
      }
      return run_verify(verify_ids, verify_all, box, format, sink.stream());
    }
    return 2;
  } catch (const SequenceParseError& e) {
    std::cerr << "input error at line " << e.line << ": " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
