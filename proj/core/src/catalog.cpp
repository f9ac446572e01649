#include "hz/catalog.hpp"

#include "hz/error.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>
#include <unistd.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hz {

namespace {

using Json = nlohmann::ordered_json;

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty() || line.front() != '#') lines_.emplace_back(line);
      start = end + 1;
    }
  }

  std::size_t line_number() const noexcept { return pos_; }

  /// Next non-blank line, or nullopt at end of input.
  std::optional<std::string> next_content() {
    while (pos_ < lines_.size()) {
      std::string line = trim(lines_[pos_++]);
      if (!line.empty()) return line;
    }
    return std::nullopt;
  }

  /// Next line, which must be present and non-blank.
  std::string expect_row(const std::string& what) {
    if (pos_ >= lines_.size()) throw Error(Errc::ParseError, "unexpected end of input, expected " + what);
    std::string line = trim(lines_[pos_++]);
    if (line.empty()) throw Error(Errc::ParseError, "blank line at line " + std::to_string(pos_) + ", expected " + what);
    return line;
  }

 private:
  static std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
  }

  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t parse_size(const std::string& word, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw Error(Errc::ParseError, std::string("invalid ") + what + " '" + word + "'");
  return v;
}

LinearCode read_block(LineReader& in, const std::string& header) {
  const auto words = split_words(header);
  if (words.size() != 3) throw Error(Errc::ParseError, "matrix header must be 'p n k', got '" + header + "'");
  const Prime p = parse_prime(words[0]);
  const std::size_t n = parse_size(words[1], "length");
  const std::size_t k = parse_size(words[2], "row count");
  if (k > n) throw Error(Errc::ParseError, "matrix header declares " + std::to_string(k) + " rows for length " + std::to_string(n));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string row = in.expect_row("matrix row " + std::to_string(i + 1) + " of " + std::to_string(k));
    if (row.size() != n)
      throw Error(Errc::ParseError, "row '" + row + "' has length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
    rows.push_back(Vector::parse(p, row));
  }
  return LinearCode::span(p, n, rows);
}

Json rows_json(const LinearCode& code) {
  Json rows = Json::array();
  for (const auto& g : code.generator()) rows.push_back(g.str());
  return rows;
}

LinearCode rows_from_json(const Json& rows, Prime p, std::size_t n) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    const auto s = r.get<std::string>();
    if (s.size() != n) throw Error(Errc::ParseError, "catalog row '" + s + "' has the wrong length");
    vs.push_back(Vector::parse(p, s));
  }
  return LinearCode::span(p, n, vs);
}

Json flags_json(const Flags& f) {
  return Json{{"SO", f.so}, {"SD", f.sd}, {"QSD", f.qsd}, {"nice", f.nice}, {"LCD", f.lcd}};
}

Json body_json(const Catalog& catalog) {
  Json records = Json::array();
  for (const auto& cr : catalog.records) {
    const auto& r = cr.record;
    Json ca{{"id", r.ca_id}, {"gen", rows_json(cr.ca)}};
    Json cb{{"id", r.cb_id}, {"gen", rows_json(cr.cb)}};
    (moved_component(r.ring) == Prime::Three ? cb : ca)["permuted"] = rows_json(cr.permuted);
    records.push_back(Json{
        {"ring", std::string(to_string(r.ring))},
        {"n", r.n},
        {"ca", std::move(ca)},
        {"cb", std::move(cb)},
        {"sigma", r.sigma.one_line()},
        {"flags", flags_json(r.flags)},
        {"size", r.cardinality.convert_to<std::uint64_t>()},
    });
  }
  Json flag_counts = Json::object();
  for (const auto& [k, v] : catalog.summary.flag_counts) flag_counts[k] = v;
  Json pairs = Json::array();
  for (const auto& p : catalog.summary.pairs)
    pairs.push_back(Json{{"ca", p.ca_id}, {"cb", p.cb_id}, {"aut_a", p.aut_a_order}, {"aut_b", p.aut_b_order}, {"count", p.count}});
  return Json{{"records", std::move(records)},
              {"summary", Json{{"total", catalog.summary.total}, {"flags", std::move(flag_counts)}, {"pairs", std::move(pairs)}}}};
}

std::string body_digest(const Catalog& catalog) { return sha256_hex(body_json(catalog).dump()); }

}  // namespace

std::string format_matrix(const LinearCode& code) {
  std::string out = std::string(to_string(code.prime())) + " " + std::to_string(code.length()) + " " +
                    std::to_string(code.dim()) + "\n";
  for (const auto& g : code.generator()) out += g.str() + "\n";
  return out;
}

LinearCode parse_matrix(std::string_view text) {
  LineReader in(text);
  const auto header = in.next_content();
  if (!header) throw Error(Errc::ParseError, "empty matrix input");
  LinearCode code = read_block(in, *header);
  if (auto extra = in.next_content()) throw Error(Errc::ParseError, "trailing input after matrix: '" + *extra + "'");
  return code;
}

std::vector<LinearCode> parse_code_list(std::string_view text) {
  LineReader in(text);
  std::vector<LinearCode> out;
  while (auto header = in.next_content()) out.push_back(read_block(in, *header));
  return out;
}

std::string format_code_list(std::span<const LinearCode> codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i > 0) out += "\n";
    out += format_matrix(codes[i]);
  }
  return out;
}

std::string format_hz_code(const HzCode& code) {
  return std::string(to_string(code.ring())) + " " + std::to_string(code.length()) + "\n" +
         format_matrix(code.binary()) + "\n" + format_matrix(code.ternary());
}

HzCode parse_hz_code(std::string_view text) {
  LineReader in(text);
  const auto header = in.next_content();
  if (!header) throw Error(Errc::ParseError, "empty code file");
  const auto words = split_words(*header);
  if (words.size() != 2) throw Error(Errc::ParseError, "code header must be 'ring n', got '" + *header + "'");
  const auto ring = parse_ring(words[0]);
  if (!ring) throw Error(Errc::ParseError, "unknown ring '" + words[0] + "'");
  const std::size_t n = parse_size(words[1], "length");
  if (n == 0 || n % 2 != 0)
    throw Error(Errc::OddLength, "code length must be even and positive, got " + std::to_string(n));

  auto block = [&](Prime expected, const char* role) {
    const auto h = in.next_content();
    if (!h) throw Error(Errc::ParseError, std::string("missing ") + role + " component");
    LinearCode c = read_block(in, *h);
    if (c.prime() != expected)
      throw Error(Errc::ParseError, std::string(role) + " component must be over F" + std::string(to_string(expected)));
    if (c.length() != n)
      throw Error(Errc::LengthMismatch, std::string(role) + " component has length " + std::to_string(c.length()) +
                                            ", header says " + std::to_string(n));
    return c;
  };
  LinearCode ca = block(Prime::Two, "binary");
  LinearCode cb = block(Prime::Three, "ternary");
  if (auto extra = in.next_content()) throw Error(Errc::ParseError, "trailing input after code: '" + *extra + "'");
  return HzCode::build(*ring, std::move(ca), std::move(cb));
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 computation failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return out.str();
}

std::string list_digest(std::span<const LinearCode> codes) { return sha256_hex(format_code_list(codes)); }

CatalogSummary tally(std::span<const CatalogRecord> records, std::vector<PairSummary> pairs) {
  CatalogSummary s;
  s.total = records.size();
  s.flag_counts = {{"SO", 0}, {"SD", 0}, {"QSD", 0}, {"nice", 0}, {"LCD", 0}};
  for (const auto& r : records) {
    const auto& f = r.record.flags;
    s.flag_counts["SO"] += f.so;
    s.flag_counts["SD"] += f.sd;
    s.flag_counts["QSD"] += f.qsd;
    s.flag_counts["nice"] += f.nice;
    s.flag_counts["LCD"] += f.lcd;
  }
  s.pairs = std::move(pairs);
  return s;
}

Catalog make_catalog(RingId ring, std::size_t n, Target target, std::span<const LinearCode> binary,
                     std::span<const LinearCode> ternary, const Classification& result) {
  Catalog c;
  c.meta.ring = ring;
  c.meta.n = n;
  c.meta.target = target;
  c.meta.binary_digest = list_digest(binary);
  c.meta.ternary_digest = list_digest(ternary);
  for (const auto& rec : result.records) {
    const LinearCode& ca = binary[rec.ca_id];
    const LinearCode& cb = ternary[rec.cb_id];
    const LinearCode& moved = moved_component(rec.ring) == Prime::Three ? cb : ca;
    c.records.push_back(CatalogRecord{rec, ca, cb, apply_perm(rec.sigma, moved)});
  }
  c.summary = tally(c.records, result.pairs);
  return c;
}

std::string to_json(const Catalog& catalog) {
  Json meta{{"ring", std::string(to_string(catalog.meta.ring))},
            {"n", catalog.meta.n},
            {"target", std::string(to_string(catalog.meta.target))},
            {"tool_version", catalog.meta.tool_version},
            {"inputs", Json{{"binary_sha256", catalog.meta.binary_digest}, {"ternary_sha256", catalog.meta.ternary_digest}}},
            {"body_sha256", body_digest(catalog)}};
  if (!catalog.meta.generated_at.empty()) meta["generated_at"] = catalog.meta.generated_at;
  Json doc{{"meta", std::move(meta)}};
  Json body = body_json(catalog);
  doc["records"] = std::move(body["records"]);
  doc["summary"] = std::move(body["summary"]);
  return doc.dump(2) + "\n";
}

Catalog catalog_from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    Catalog c;
    const auto& meta = doc.at("meta");
    const auto ring = parse_ring(meta.at("ring").get<std::string>());
    const auto target = parse_target(meta.at("target").get<std::string>());
    if (!ring || !target) throw Error(Errc::ParseError, "catalog names an unknown ring or target");
    c.meta.ring = *ring;
    c.meta.target = *target;
    c.meta.n = meta.at("n").get<std::size_t>();
    c.meta.tool_version = meta.at("tool_version").get<std::string>();
    c.meta.binary_digest = meta.at("inputs").at("binary_sha256").get<std::string>();
    c.meta.ternary_digest = meta.at("inputs").at("ternary_sha256").get<std::string>();
    if (meta.contains("generated_at")) c.meta.generated_at = meta["generated_at"].get<std::string>();

    const std::size_t n = c.meta.n;
    for (const auto& jr : doc.at("records")) {
      ClassificationRecord r;
      r.ring = *ring;
      r.n = jr.at("n").get<std::size_t>();
      r.ca_id = jr.at("ca").at("id").get<std::size_t>();
      r.cb_id = jr.at("cb").at("id").get<std::size_t>();
      r.sigma = Permutation::from_one_line(jr.at("sigma").get<std::vector<int>>());
      const auto& f = jr.at("flags");
      r.flags = Flags{f.at("SO").get<bool>(), f.at("SD").get<bool>(), f.at("QSD").get<bool>(),
                      f.at("nice").get<bool>(), f.at("LCD").get<bool>()};
      r.cardinality = jr.at("size").get<std::uint64_t>();
      const Prime moved = moved_component(*ring);
      const auto& jm = jr.at(moved == Prime::Three ? "cb" : "ca");
      c.records.push_back(CatalogRecord{std::move(r), rows_from_json(jr.at("ca").at("gen"), Prime::Two, n),
                                        rows_from_json(jr.at("cb").at("gen"), Prime::Three, n),
                                        rows_from_json(jm.at("permuted"), moved, n)});
    }
    const auto& js = doc.at("summary");
    c.summary.total = js.at("total").get<std::size_t>();
    for (const auto& [k, v] : js.at("flags").items()) c.summary.flag_counts[k] = v.get<std::size_t>();
    for (const auto& jp : js.at("pairs"))
      c.summary.pairs.push_back(PairSummary{jp.at("ca").get<std::size_t>(), jp.at("cb").get<std::size_t>(),
                                            jp.at("aut_a").get<std::uint64_t>(), jp.at("aut_b").get<std::uint64_t>(),
                                            jp.at("count").get<std::size_t>()});
    if (meta.at("body_sha256").get<std::string>() != body_digest(c))
      throw Error(Errc::ParseError, "catalog body does not match its digest");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed catalog: ") + e.what());
  }
}

std::vector<std::string> validate_catalog(const Catalog& catalog, std::span<const LinearCode> binary,
                                          std::span<const LinearCode> ternary) {
  std::vector<std::string> problems;
  if (!(tally(catalog.records, catalog.summary.pairs) == catalog.summary))
    problems.push_back("summary tallies do not match the records");
  std::size_t per_pair = 0;
  for (const auto& p : catalog.summary.pairs) per_pair += p.count;
  if (per_pair != catalog.records.size()) problems.push_back("per-pair counts do not add up to the record total");
  for (std::size_t i = 0; i < catalog.records.size(); ++i) {
    const auto& cr = catalog.records[i];
    const LinearCode& moved = moved_component(cr.record.ring) == Prime::Three ? cr.cb : cr.ca;
    if (moved.prime() != cr.permuted.prime() || apply_perm(cr.record.sigma, moved) != cr.permuted)
      problems.push_back("record " + std::to_string(i) + ": permuted component does not match sigma");
  }
  if (!binary.empty() || !ternary.empty()) {
    if (list_digest(binary) != catalog.meta.binary_digest) problems.push_back("binary list digest mismatch");
    if (list_digest(ternary) != catalog.meta.ternary_digest) problems.push_back("ternary list digest mismatch");
    for (std::size_t i = 0; i < catalog.records.size(); ++i) {
      const auto& cr = catalog.records[i];
      if (cr.record.ca_id >= binary.size() || cr.record.cb_id >= ternary.size() ||
          binary[cr.record.ca_id] != cr.ca || ternary[cr.record.cb_id] != cr.cb)
        problems.push_back("record " + std::to_string(i) + ": embedded components differ from the input lists");
    }
  }
  return problems;
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("failed writing " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hz
