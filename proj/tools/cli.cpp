#include "cli.hpp"

#include "hz/catalog.hpp"
#include "hz/classify.hpp"
#include "hz/code.hpp"
#include "hz/error.hpp"
#include "hz/group.hpp"
#include "hz/symplectic.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace hz::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string flag_line(const Flags& f) {
  std::ostringstream s;
  s << "SO=" << yes_no(f.so) << " QSD=" << yes_no(f.qsd) << " SD=" << yes_no(f.sd) << " nice=" << yes_no(f.nice)
    << " LCD=" << yes_no(f.lcd);
  return s.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-")
    out << contents;
  else
    write_file_atomic(path, contents);
}

struct CheckOptions {
  std::string file;
  bool euclidean = false;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const HzCode code = parse_hz_code(read_file(o.file));
  out << "ring: " << to_string(code.ring()) << "\n"
      << "n: " << code.length() << "\n"
      << "dim_a: " << code.binary().dim() << "\n"
      << "dim_b: " << code.ternary().dim() << "\n"
      << "size: " << code.cardinality() << "\n"
      << flag_line(flags(code)) << "\n";
  if (o.euclidean) out << "euclidean_SO=" << yes_no(is_euclidean_self_orthogonal(code)) << "\n";
  return kOk;
}

struct DualOptions {
  std::string file;
  std::string out;
  bool brute = false;
  std::uint64_t budget = kDefaultWordBudget;
};

int cmd_dual(const DualOptions& o, std::ostream& out) {
  const HzCode code = parse_hz_code(read_file(o.file));
  const HzCode d = dual(code);
  std::vector<std::string> report{"dual size: " + d.cardinality().str()};
  bool match = true;
  if (o.brute) {
    if (code.length() > kMaxExhaustiveLength)
      throw Error(Errc::BudgetExceeded, "--brute is limited to n <= 8");
    auto words = enumerate_words(d, o.budget);
    std::sort(words.begin(), words.end());
    match = words == dual_bruteforce(code, o.budget);
    report.push_back(match ? "oracle: match" : "oracle: MISMATCH");
  }
  if (o.out.empty() || o.out == "-") {
    out << format_hz_code(d);
    for (const auto& line : report) out << "# " << line << "\n";
  } else {
    write_file_atomic(o.out, format_hz_code(d));
    for (const auto& line : report) out << line << "\n";
  }
  return match ? kOk : kVerificationFailed;
}

struct ClassifyOptions {
  std::string ring;
  std::size_t n = 0;
  std::string target;
  std::string ca_list;
  std::string cb_list;
  std::string out;
  bool verify = false;
  bool timestamp = false;
  std::uint64_t budget = 1u << 22;
};

int cmd_classify(const ClassifyOptions& o, std::ostream& out, std::ostream& err) {
  const auto ring = parse_ring(o.ring);
  if (!ring) throw Error(Errc::ParseError, "unknown ring '" + o.ring + "'");
  const auto target = parse_target(o.target);
  if (!target) throw Error(Errc::ParseError, "unknown target '" + o.target + "'");
  if (o.n == 0 || o.n % 2 != 0) throw Error(Errc::OddLength, "n must be even and positive");
  if (o.n > kMaxExhaustiveLength) throw Error(Errc::BudgetExceeded, "classification is limited to n <= 8");
  if (o.verify && o.n > 6) throw Error(Errc::BudgetExceeded, "--verify is limited to n <= 6");

  std::vector<LinearCode> binary;
  std::vector<LinearCode> ternary;
  if (o.ca_list.empty() || o.cb_list.empty()) {
    auto lists = component_lists(*ring, o.n, *target, o.budget);
    binary = std::move(lists.binary);
    ternary = std::move(lists.ternary);
  }
  if (!o.ca_list.empty()) binary = parse_code_list(read_file(o.ca_list));
  if (!o.cb_list.empty()) ternary = parse_code_list(read_file(o.cb_list));
  auto check_list = [&](const std::vector<LinearCode>& list, Prime p, const char* role) {
    for (const auto& c : list) {
      if (c.prime() != p) throw Error(Errc::ParseError, std::string(role) + " list holds a code over the wrong field");
      if (c.length() != o.n)
        throw Error(Errc::LengthMismatch, std::string(role) + " list holds a code of length " +
                                              std::to_string(c.length()) + ", expected " + std::to_string(o.n));
    }
  };
  check_list(binary, Prime::Two, "binary");
  check_list(ternary, Prime::Three, "ternary");

  const Classification result = classify(*ring, binary, ternary, *target);
  for (const auto& p : result.pairs)
    out << "pair ca=" << p.ca_id << " cb=" << p.cb_id << " |Aut(Ca)|=" << p.aut_a_order
        << " |Aut(Cb)|=" << p.aut_b_order << " cosets=" << p.count << "\n";
  out << "total: " << result.records.size() << "\n";

  int status = kOk;
  if (o.verify) {
    const auto report = verify_classification(result.records, *ring, binary, ternary, *target);
    if (report.ok()) {
      out << "verify: ok\n";
    } else {
      for (const auto& p : report.problems) err << "verification: " << p << "\n";
      out << "verify: FAILED\n";
      status = kVerificationFailed;
    }
  }
  if (!o.out.empty()) {
    Catalog catalog = make_catalog(*ring, o.n, *target, binary, ternary, result);
    if (o.timestamp) catalog.meta.generated_at = utc_timestamp();
    emit(o.out, to_json(catalog), out);
  }
  return status;
}

struct CountOptions {
  std::string p;
  std::size_t m = 0;
  std::size_t k = 0;
  bool enumerate = false;
  bool print = false;
  std::uint64_t budget = kDefaultIsotropicBudget;
};

int cmd_count_isotropic(const CountOptions& o, std::ostream& out) {
  const Prime p = parse_prime(o.p);
  const BigInt count = count_isotropic_formula(p, o.m, o.k);
  out << "count: " << count << "\n";
  if (!o.enumerate && !o.print) return kOk;
  const auto codes = enumerate_isotropic(SymplecticSpace(p, o.m), o.k, o.budget);
  out << "enumerated: " << codes.size() << "\n";
  if (o.print) out << "\n" << format_code_list(codes);
  return BigInt(codes.size()) == count ? kOk : kVerificationFailed;
}

struct AutOptions {
  std::string file;
  std::string p;
  bool list = false;
};

int cmd_aut(const AutOptions& o, std::ostream& out) {
  const LinearCode code = parse_matrix(read_file(o.file));
  if (!o.p.empty() && parse_prime(o.p) != code.prime())
    throw Error(Errc::ParseError, "code file is over F" + std::string(to_string(code.prime())) + ", not F" + o.p);
  const PermGroup group = automorphism_group(code);
  out << "order: " << group.order() << "\n";
  out << "generators:";
  if (group.generators().empty()) out << " ()";
  for (const auto& g : group.generators()) out << " " << g.cycles();
  out << "\n";
  out << "elements: " << group.elements().size() << "\n";
  if (o.list)
    for (const auto& e : group.elements()) out << "  " << e.cycles() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic codes over the non-unital rings H23 and H32", "hzcodes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CheckOptions check;
  auto* sc_check = app.add_subcommand("check", "Report size and SO/SD/QSD/nice/LCD flags of a code file");
  sc_check->add_option("file", check.file, "H_z-code file")->required();
  sc_check->add_flag("--euclidean", check.euclidean, "Also report Euclidean self-orthogonality");

  DualOptions dual_opts;
  auto* sc_dual = app.add_subcommand("dual", "Write the symplectic dual of a code file");
  sc_dual->add_option("file", dual_opts.file, "H_z-code file")->required();
  sc_dual->add_option("-o,--out", dual_opts.out, "Output file (default stdout)");
  sc_dual->add_flag("--brute", dual_opts.brute, "Cross-check against a scan of all words");
  sc_dual->add_option("--budget", dual_opts.budget, "Word budget for --brute")->capture_default_str();

  ClassifyOptions cls;
  auto* sc_cls = app.add_subcommand("classify", "Classify codes up to permutation equivalence");
  sc_cls->add_option("--ring", cls.ring, "H23 or H32")->required();
  sc_cls->add_option("--n", cls.n, "Even code length (<= 8)")->required();
  sc_cls->add_option("--target", cls.target, "SO, QSD or SD")->required();
  sc_cls->add_option("--ca-list", cls.ca_list, "Binary component list (default: generated)");
  sc_cls->add_option("--cb-list", cls.cb_list, "Ternary component list (default: generated)");
  sc_cls->add_option("-o,--out", cls.out, "Catalog JSON output ('-' for stdout)");
  sc_cls->add_flag("--verify", cls.verify, "Check soundness, inequivalence and completeness (n <= 6)");
  sc_cls->add_flag("--timestamp", cls.timestamp, "Record generation time in the catalog metadata");
  sc_cls->add_option("--budget", cls.budget, "Subspace budget for generated lists")->capture_default_str();

  CountOptions cnt;
  auto* sc_cnt = app.add_subcommand("count-isotropic", "Count totally isotropic k-subspaces of F_p^{2m}");
  sc_cnt->add_option("p", cnt.p, "2 or 3")->required();
  sc_cnt->add_option("m", cnt.m, "Half length")->required();
  sc_cnt->add_option("k", cnt.k, "Subspace dimension")->required();
  sc_cnt->add_flag("--enumerate", cnt.enumerate, "Enumerate and compare with the formula");
  sc_cnt->add_flag("--print", cnt.print, "Print the enumerated subspaces");
  sc_cnt->add_option("--budget", cnt.budget, "Bound on p^(k*2m)")->capture_default_str();

  AutOptions aut;
  auto* sc_aut = app.add_subcommand("aut", "Permutation automorphism group of a linear code");
  sc_aut->add_option("file", aut.file, "Matrix file")->required();
  sc_aut->add_option("--p", aut.p, "Expected field characteristic");
  sc_aut->add_flag("--list", aut.list, "List every element");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*sc_check) return cmd_check(check, out);
    if (*sc_dual) return cmd_dual(dual_opts, out);
    if (*sc_cls) return cmd_classify(cls, out, err);
    if (*sc_cnt) return cmd_count_isotropic(cnt, out);
    if (*sc_aut) return cmd_aut(aut, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::VerificationFailed ? kVerificationFailed : kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace hz::cli
