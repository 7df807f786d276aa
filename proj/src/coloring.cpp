#include "hyperlift/coloring.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hyperlift/errors.hpp"

namespace hyperlift {

namespace {

void validate_shape(int n, int r, int q) {
  PrimeField check(q);
  (void)check;
  if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
  if (n < r) throw std::invalid_argument("vertex count n must be at least r");
  if (n > kMaxBinomialN)
    throw std::invalid_argument("vertex count n must be at most " +
                                std::to_string(kMaxBinomialN));
  if (binom(n, r) > kMaxColoringValues)
    throw ResourceError("coloring with C(" + std::to_string(n) + "," +
                        std::to_string(r) + ") values exceeds the size cap");
}

void validate_edge(const HyperedgeColoring& f, const VertexSet& e) {
  if (static_cast<int>(e.size()) != f.r)
    throw std::invalid_argument("hyperedge size does not match uniformity");
  if (!is_strictly_increasing(e) || e.front() < 0 || e.back() >= f.n)
    throw std::invalid_argument("hyperedge must be strictly increasing within [0, n)");
}

}  // namespace

HyperedgeColoring HyperedgeColoring::zero(int n, int r, int q) {
  validate_shape(n, r, q);
  HyperedgeColoring f;
  f.n = n;
  f.r = r;
  f.q = q;
  f.values.assign(binom(n, r), 0);
  return f;
}

FieldElement HyperedgeColoring::value_at(const VertexSet& e) const {
  validate_edge(*this, e);
  return values[colex_rank(e)];
}

void HyperedgeColoring::set_value(const VertexSet& e, FieldElement v) {
  validate_edge(*this, e);
  if (v >= q) throw std::invalid_argument("value out of field range");
  values[colex_rank(e)] = v;
}

bool HyperedgeColoring::is_zero() const {
  for (FieldElement v : values)
    if (v) return false;
  return true;
}

HyperedgeColoring constant_coloring(int n, int r, int q, FieldElement c) {
  auto f = HyperedgeColoring::zero(n, r, q);
  if (c >= q) throw std::invalid_argument("constant value out of field range");
  std::fill(f.values.begin(), f.values.end(), c);
  return f;
}

HyperedgeColoring basis_coloring(int n, int r, int q, const VertexSet& e) {
  auto f = HyperedgeColoring::zero(n, r, q);
  f.set_value(e, 1);
  return f;
}

HyperedgeColoring vs_combine(const HyperedgeColoring& a, const HyperedgeColoring& b,
                             FieldElement alpha) {
  if (!a.same_shape(b)) throw std::invalid_argument("coloring shapes do not match");
  if (alpha >= a.q) throw std::invalid_argument("scalar out of field range");
  HyperedgeColoring out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] =
        static_cast<FieldElement>((alpha * a.values[i] + b.values[i]) % a.q);
  return out;
}

HyperedgeColoring complement(const HyperedgeColoring& f) {
  if (f.q != 2) throw std::domain_error("complement is defined for q = 2 colorings only");
  HyperedgeColoring out = f;
  for (auto& v : out.values) v ^= 1u;
  return out;
}

FieldElement total_sum(const HyperedgeColoring& f) {
  std::uint64_t acc = 0;
  for (FieldElement v : f.values) {
    acc += v;
    if (acc >= (1ull << 60)) acc %= static_cast<std::uint64_t>(f.q);
  }
  return static_cast<FieldElement>(acc % static_cast<std::uint64_t>(f.q));
}

std::uint64_t hamming_distance(const HyperedgeColoring& f, const HyperedgeColoring& g) {
  if (!f.same_shape(g)) throw std::invalid_argument("coloring shapes do not match");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] != g.values[i]) ++d;
  return d;
}

HyperedgeColoring random_coloring(int n, int r, int q, std::mt19937_64& rng) {
  auto f = HyperedgeColoring::zero(n, r, q);
  for (auto& v : f.values)
    v = static_cast<FieldElement>(rng() % static_cast<std::uint64_t>(q));
  return f;
}

std::string write_coloring(const HyperedgeColoring& f) {
  validate_shape(f.n, f.r, f.q);
  if (f.values.size() != binom(f.n, f.r))
    throw std::invalid_argument("value count does not match C(n,r)");
  std::string out;
  out += "HEC 1\n";
  out += "n=" + std::to_string(f.n) + " r=" + std::to_string(f.r) +
         " q=" + std::to_string(f.q) + "\n";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    out += std::to_string(static_cast<int>(f.values[i]));
    out += (i % 20 == 19 || i + 1 == f.values.size()) ? '\n' : ' ';
  }
  return out;
}

namespace {

struct Token {
  std::string_view text;
  int line;
  int col;
};

// Splits into whitespace-separated tokens, dropping `#` comment lines.
std::vector<Token> tokenize(std::string_view text, int& last_line) {
  std::vector<Token> tokens;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    std::size_t eol = text.find('\n', i);
    if (eol == std::string_view::npos) eol = n;
    std::string_view ln = text.substr(i, eol - i);
    std::size_t j = 0;
    while (j < ln.size() && (ln[j] == ' ' || ln[j] == '\t' || ln[j] == '\r')) ++j;
    if (j < ln.size() && ln[j] != '#') {
      while (j < ln.size()) {
        while (j < ln.size() && (ln[j] == ' ' || ln[j] == '\t' || ln[j] == '\r')) ++j;
        if (j >= ln.size()) break;
        std::size_t start = j;
        while (j < ln.size() && ln[j] != ' ' && ln[j] != '\t' && ln[j] != '\r') ++j;
        tokens.push_back(Token{ln.substr(start, j - start), line,
                               static_cast<int>(start) + 1});
      }
    }
    i = eol + 1;
    ++line;
  }
  last_line = line;
  return tokens;
}

long parse_int(const Token& t, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    throw ParseError(t.line, t.col, std::string("expected ") + what + ", got '" +
                                        std::string(t.text) + "'");
  return v;
}

long parse_keyed_int(const Token& t, std::string_view key) {
  if (t.text.size() <= key.size() || t.text.substr(0, key.size()) != key)
    throw ParseError(t.line, t.col, "expected '" + std::string(key) +
                                        "<int>', got '" + std::string(t.text) + "'");
  Token inner{t.text.substr(key.size()), t.line, t.col + static_cast<int>(key.size())};
  return parse_int(inner, "an integer");
}

}  // namespace

HyperedgeColoring read_coloring(std::string_view text) {
  int last_line = 1;
  const auto tokens = tokenize(text, last_line);
  std::size_t k = 0;
  auto need = [&](const char* what) -> const Token& {
    if (k >= tokens.size())
      throw ParseError(last_line, 1, std::string("unexpected end of input, expected ") + what);
    return tokens[k++];
  };

  const Token& magic = need("'HEC'");
  if (magic.text != "HEC")
    throw ParseError(magic.line, magic.col, "expected 'HEC', got '" + std::string(magic.text) + "'");
  const Token& version = need("format version");
  if (version.text != "1")
    throw ParseError(version.line, version.col,
                     "unsupported format version '" + std::string(version.text) + "'");

  const Token& tn = need("n=<int>");
  const long n = parse_keyed_int(tn, "n=");
  const Token& tr = need("r=<int>");
  const long r = parse_keyed_int(tr, "r=");
  const Token& tq = need("q=<int>");
  const long q = parse_keyed_int(tq, "q=");

  try {
    validate_shape(static_cast<int>(n), static_cast<int>(r), static_cast<int>(q));
  } catch (const ResourceError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(tn.line, tn.col, std::string("malformed header: ") + e.what());
  }

  auto f = HyperedgeColoring::zero(static_cast<int>(n), static_cast<int>(r),
                                   static_cast<int>(q));
  const std::uint64_t expected = f.size();
  for (std::uint64_t i = 0; i < expected; ++i) {
    if (k >= tokens.size())
      throw ParseError(last_line, 1,
                       "expected " + std::to_string(expected) + " values, found " +
                           std::to_string(i));
    const Token& t = tokens[k++];
    const long v = parse_int(t, "a value");
    if (v < 0 || v >= q)
      throw ParseError(t.line, t.col, "value " + std::to_string(v) +
                                          " out of range for q=" + std::to_string(q));
    f.values[i] = static_cast<FieldElement>(v);
  }
  if (k < tokens.size()) {
    const Token& t = tokens[k];
    throw ParseError(t.line, t.col, "expected " + std::to_string(expected) +
                                        " values, found extra token '" +
                                        std::string(t.text) + "'");
  }
  return f;
}

HyperedgeColoring read_coloring_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_coloring(ss.str());
}

void write_coloring_file(const HyperedgeColoring& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
  out << write_coloring(f);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace hyperlift
