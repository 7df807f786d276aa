#include "hyperlift/ramsey.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hyperlift/errors.hpp"

namespace hyperlift {

HyperedgeColoring lift_3coloring(const HyperedgeColoring& f, FieldElement rainbow_color) {
  if (f.r != 2 || f.q != 3)
    throw std::invalid_argument("lift_3coloring requires a 2-uniform coloring over q=3");
  if (f.n < 3) throw std::invalid_argument("lift_3coloring requires at least 3 vertices");
  if (rainbow_color >= 3) throw std::invalid_argument("rainbow color must be 0, 1, or 2");

  auto g = HyperedgeColoring::zero(f.n, 3, 3);
  std::uint64_t row = 0;
  for_each_k_subset(f.n, 3, [&](const VertexSet& t) {
    const FieldElement ab = f.values[static_cast<std::uint64_t>(t[0]) + binom(t[1], 2)];
    const FieldElement ac = f.values[static_cast<std::uint64_t>(t[0]) + binom(t[2], 2)];
    const FieldElement bc = f.values[static_cast<std::uint64_t>(t[1]) + binom(t[2], 2)];
    FieldElement out;
    if (ab == ac && ac == bc) {
      out = ab;
    } else if (ab != ac && ac != bc && ab != bc) {
      out = rainbow_color;
    } else {
      // Two edges share a color; the remaining one appears an odd number
      // of times.
      out = (ab == ac) ? bc : (ab == bc ? ac : ab);
    }
    g.values[row++] = out;
  });
  return g;
}

HyperedgeColoring blowup_5color(const HyperedgeColoring& base, int copies) {
  if (base.r != 3 || base.q != 3)
    throw std::invalid_argument("blow-up requires a 3-uniform coloring over q=3");
  if (copies < 3)
    throw std::domain_error(
        "blow-up requires at least 3 copies: with fewer, the fifth-color "
        "clique-minus-edge target has no hyperedges");
  const int b = base.n;
  const long n = static_cast<long>(copies) * b;
  if (n > kMaxBinomialN)
    throw std::invalid_argument("blow-up order " + std::to_string(n) +
                                " exceeds the supported maximum of " +
                                std::to_string(kMaxBinomialN));

  auto out = HyperedgeColoring::zero(static_cast<int>(n), 3, 5);
  std::uint64_t row = 0;
  for_each_k_subset(static_cast<int>(n), 3, [&](const VertexSet& t) {
    const int b0 = t[0] / b, b1 = t[1] / b, b2 = t[2] / b;
    FieldElement v;
    if (b0 == b1 && b1 == b2) {
      const std::uint64_t idx = static_cast<std::uint64_t>(t[0] - b0 * b) +
                                binom(t[1] - b1 * b, 2) + binom(t[2] - b2 * b, 3);
      v = base.values[idx];
    } else if (b0 != b1 && b1 != b2 && b0 != b2) {
      v = 4;
    } else {
      v = 3;
    }
    out.values[row++] = v;
  });
  return out;
}

namespace {

void validate_spec(const AvoidanceSpec& spec, const HyperedgeColoring& f) {
  std::set<FieldElement> colors;
  for (const auto& t : spec.targets) {
    if (t.color >= f.q)
      throw std::invalid_argument("target color " + std::to_string(t.color) +
                                  " is not a color of the input");
    if (!colors.insert(t.color).second)
      throw std::invalid_argument("duplicate target color " + std::to_string(t.color));
    if (t.pattern == Pattern::Clique) {
      if (t.m < f.r) throw std::invalid_argument("clique target smaller than the uniformity");
    } else {
      if (t.m <= f.r)
        throw std::invalid_argument("clique-minus-edge target must exceed the uniformity");
    }
  }
}

std::string pattern_text(const AvoidTarget& t, int r) {
  std::string s = "K_" + std::to_string(t.m) + "^(" + std::to_string(r) + ")";
  if (t.pattern == Pattern::CliqueMinusEdge) s += "-e";
  return s;
}

}  // namespace

std::string bound_statement(const AvoidanceSpec& spec, int n, int r) {
  auto sorted = spec.targets;
  std::sort(sorted.begin(), sorted.end(),
            [](const AvoidTarget& a, const AvoidTarget& b) { return a.color < b.color; });
  std::string s = "R(";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += ", ";
    s += pattern_text(sorted[i], r);
  }
  s += "; " + std::to_string(r) + ") > " + std::to_string(n);
  return s;
}

Certificate verify_avoidance(const HyperedgeColoring& f, const AvoidanceSpec& spec) {
  validate_spec(spec, f);
  Certificate cert;
  cert.coloring = f;
  cert.spec = spec;
  cert.statement = bound_statement(spec, f.n, f.r);
  for (const auto& t : spec.targets) {
    if (t.m > f.n) continue;  // cannot occur in a smaller coloring
    std::optional<PatternHit> hit;
    if (t.pattern == Pattern::Clique)
      hit = find_mono_clique(f, t.color, t.m);
    else
      hit = find_clique_minus_edge(f, t.color, t.m, t.mode);
    if (hit) cert.violations.push_back(std::move(*hit));
  }
  cert.verified = cert.violations.empty();
  return cert;
}

namespace {

std::string vertex_list(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

Certificate certify_from_base(const HyperedgeColoring& base,
                              const std::array<int, 3>& clique_sizes, int copies,
                              FieldElement rainbow_color) {
  if (base.r != 2 || base.q != 3)
    throw std::invalid_argument("certificate base must be a 3-colored graph (2-uniform, q=3)");
  for (int i = 0; i < 3; ++i) {
    if (clique_sizes[static_cast<std::size_t>(i)] < 3)
      throw std::invalid_argument("base clique sizes must be at least 3");
    const auto hit = find_mono_clique(base, static_cast<FieldElement>(i),
                                      clique_sizes[static_cast<std::size_t>(i)]);
    if (hit)
      throw BaseCheckError("base coloring contains a monochromatic K_" +
                           std::to_string(clique_sizes[static_cast<std::size_t>(i)]) +
                           " in color " + std::to_string(i) + ": vertices " +
                           vertex_list(hit->vertices));
  }

  const auto lifted = lift_3coloring(base, rainbow_color);
  const auto blown = blowup_5color(lifted, copies);

  AvoidanceSpec spec;
  spec.targets.push_back({0, Pattern::CliqueMinusEdge, 2 * clique_sizes[0] - 1,
                          SearchMode::Contains});
  spec.targets.push_back({1, Pattern::Clique, 2 * clique_sizes[1] - 1, SearchMode::Contains});
  spec.targets.push_back({2, Pattern::Clique, 2 * clique_sizes[2] - 1, SearchMode::Contains});
  spec.targets.push_back({3, Pattern::Clique, 5, SearchMode::Contains});
  spec.targets.push_back({4, Pattern::CliqueMinusEdge, copies + 1, SearchMode::Contains});
  return verify_avoidance(blown, spec);
}

Certificate certify_bound(const std::string& base_family, int copies,
                          FieldElement rainbow_color) {
  const auto base = generate_family(base_family);
  if (base.r != 2 || base.q != 3)
    throw std::invalid_argument("family '" + base_family +
                                "' does not generate a 3-colored graph");
  return certify_from_base(base, {3, 3, 3}, copies, rainbow_color);
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_small_int(std::string_view t, const std::string& what) {
  if (t.empty() || t.size() > 9 ||
      !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("invalid " + what + " '" + std::string(t) + "'");
  int v = 0;
  for (char c : t) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

AvoidanceSpec parse_avoidance_spec(std::string_view text) {
  AvoidanceSpec spec;
  if (text.empty()) return spec;
  for (std::string_view entry : split(text, ',')) {
    const auto fields = split(entry, ':');
    if (fields.size() < 3 || fields.size() > 4)
      throw std::invalid_argument("target '" + std::string(entry) +
                                  "' must be <color>:<pattern>:<m>[:<mode>]");
    AvoidTarget t;
    t.color = static_cast<FieldElement>(parse_small_int(fields[0], "target color"));
    if (fields[1] == "clique")
      t.pattern = Pattern::Clique;
    else if (fields[1] == "cliqueminus")
      t.pattern = Pattern::CliqueMinusEdge;
    else
      throw std::invalid_argument("unknown pattern '" + std::string(fields[1]) + "'");
    t.m = parse_small_int(fields[2], "pattern size");
    t.mode = SearchMode::Contains;
    if (fields.size() == 4) {
      if (t.pattern != Pattern::CliqueMinusEdge)
        throw std::invalid_argument("mode suffix applies to cliqueminus targets only");
      if (fields[3] == "induced")
        t.mode = SearchMode::Induced;
      else if (fields[3] == "contains")
        t.mode = SearchMode::Contains;
      else
        throw std::invalid_argument("unknown mode '" + std::string(fields[3]) + "'");
    }
    spec.targets.push_back(t);
  }
  return spec;
}

std::string format_avoidance_spec(const AvoidanceSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.targets.size(); ++i) {
    const auto& t = spec.targets[i];
    if (i) out += ",";
    out += std::to_string(t.color) + ":";
    out += (t.pattern == Pattern::Clique) ? "clique" : "cliqueminus";
    out += ":" + std::to_string(t.m);
    if (t.pattern == Pattern::CliqueMinusEdge)
      out += (t.mode == SearchMode::Induced) ? ":induced" : ":contains";
  }
  return out;
}

std::string write_certificate(const Certificate& cert) {
  return write_coloring(cert.coloring) + "# CERT statement=" + cert.statement +
         " verified=" + (cert.verified ? "true" : "false") +
         " targets=" + format_avoidance_spec(cert.spec) + "\n";
}

Certificate read_certificate(std::string_view text) {
  Certificate cert;
  cert.coloring = read_coloring(text);

  int line_no = 0;
  std::string_view cert_line;
  int at_line = 0;
  std::size_t i = 0;
  while (i <= text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', i);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view ln = text.substr(i, eol - i);
    if (ln.substr(0, 7) == "# CERT ") {
      cert_line = ln.substr(7);
      at_line = line_no;
      break;
    }
    if (eol == text.size()) break;
    i = eol + 1;
  }
  if (cert_line.empty()) throw ParseError(line_no, 1, "no '# CERT' line found");

  const std::size_t tpos = cert_line.rfind(" targets=");
  const std::size_t vpos = cert_line.rfind(" verified=");
  if (cert_line.substr(0, 10) != "statement=" || vpos == std::string_view::npos ||
      tpos == std::string_view::npos || vpos > tpos)
    throw ParseError(at_line, 1, "malformed CERT line");
  cert.statement = std::string(cert_line.substr(10, vpos - 10));
  const std::string_view verified = cert_line.substr(vpos + 10, tpos - (vpos + 10));
  if (verified == "true")
    cert.verified = true;
  else if (verified == "false")
    cert.verified = false;
  else
    throw ParseError(at_line, 1, "verified flag must be true or false");
  cert.spec = parse_avoidance_spec(cert_line.substr(tpos + 9));
  return cert;
}

}  // namespace hyperlift
