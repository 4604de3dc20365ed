#include "germfile.hpp"

#include <fstream>
#include <sstream>

#include "germcalc/errors.hpp"
#include "germcalc/parser.hpp"

namespace germcalc::app {

namespace {

bool isBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::size_t skipBlanks(std::string_view s, std::size_t i) {
  while (i < s.size() && isBlank(s[i])) ++i;
  return i;
}

}  // namespace

Germfile parseGermfile(std::string_view text, std::uint32_t degreeCap, const std::string& source) {
  Germfile g;
  g.source = source;
  bool sawX = false;
  std::size_t lineNo = 0;
  auto fail = [&](std::size_t column, const std::string& what) -> GermfileError {
    return GermfileError(source, lineNo, column, what);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t start = skipBlanks(line, 0);
    if (start == line.size()) continue;

    if (line.substr(start, 4) == "ring" && (start + 4 == line.size() || isBlank(line[start + 4]))) {
      if (g.ring) throw fail(start + 1, "second ring declaration");
      std::vector<std::pair<std::string, std::size_t>> words;
      std::size_t i = start + 4;
      while (true) {
        while (i < line.size() && (isBlank(line[i]) || line[i] == ',')) ++i;
        if (i == line.size()) break;
        const std::size_t w = i;
        while (i < line.size() && !isBlank(line[i]) && line[i] != ',') ++i;
        words.emplace_back(std::string(line.substr(w, i - w)), w + 1);
      }
      if (words.empty()) throw fail(start + 5, "ring needs a field and variables");
      Field field = Field::rationals();
      try {
        field = Field::parse(words[0].first);
      } catch (const std::exception& e) {
        throw fail(words[0].second, e.what());
      }
      std::vector<std::string> names;
      for (std::size_t k = 1; k < words.size(); ++k) names.push_back(words[k].first);
      if (names.empty()) throw fail(start + 1, "ring declares no variables");
      try {
        g.ring = GermRing::create(names, field, std::nullopt, degreeCap);
      } catch (const std::exception& e) {
        throw fail(words[1].second, e.what());
      }
      continue;
    }

    const std::size_t colon = line.find(':', start);
    if (colon == std::string_view::npos) throw fail(start + 1, "expected 'ring', 'X:', 'f:' or 'seed:'");
    std::string key(line.substr(start, colon - start));
    while (!key.empty() && isBlank(key.back())) key.pop_back();
    const std::string_view body = line.substr(colon + 1);
    const std::size_t bodyColumn = colon + 2;

    if (key == "seed") {
      if (g.seed) throw fail(start + 1, "second seed");
      const std::size_t b = skipBlanks(body, 0);
      std::size_t e = b;
      while (e < body.size() && body[e] >= '0' && body[e] <= '9') ++e;
      if (b == e || skipBlanks(body, e) != body.size()) throw fail(bodyColumn + b, "seed must be a nonnegative integer");
      try {
        g.seed = std::stoull(std::string(body.substr(b, e - b)));
      } catch (const std::out_of_range&) {
        throw fail(bodyColumn + b, "seed out of range");
      }
      continue;
    }
    if (key != "X" && key != "f") throw fail(start + 1, "unknown directive '" + key + "'");
    if (!g.ring) throw fail(start + 1, "'" + key + ":' before the ring declaration");
    try {
      if (key == "X") {
        if (sawX) throw fail(start + 1, "second X");
        g.phi = parsePolynomialList(body, g.ring);
        sawX = true;
      } else {
        if (g.f) throw fail(start + 1, "second f");
        g.f = parsePolynomial(body, g.ring);
      }
    } catch (const ParseError& e) {
      std::string what = e.what();
      if (const auto at = what.rfind(" at position "); at != std::string::npos) what.resize(at);
      throw fail(bodyColumn + e.position(), what);
    }
  }
  lineNo = 0;
  if (!g.ring) throw fail(0, "missing ring declaration");
  if (!sawX) throw fail(0, "missing 'X:' line");
  return g;
}

Germfile loadGermfile(const std::string& path, std::uint32_t degreeCap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseGermfile(buf.str(), degreeCap, path);
}

}  // namespace germcalc::app
