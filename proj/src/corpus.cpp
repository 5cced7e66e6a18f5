#include "spectra/corpus.hpp"

#include <sstream>

namespace spectra {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::pair<int, int> parse_range(const std::string& s, const std::string& atom) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw Error("corpus atom \"" + atom + "\" needs a range a..b");
  int a = std::stoi(s.substr(0, dots));
  int b = std::stoi(s.substr(dots + 2));
  if (a < 1 || b < a)
    throw Error("corpus range " + s + " is empty or malformed");
  return {a, b};
}

}  // namespace

RingCorpus build_ring_corpus(const std::string& spec) {
  RingCorpus corpus;
  corpus.spec = spec;
  for (const std::string& atom : split(spec, ',')) {
    if (atom.empty()) continue;
    if (atom.rfind("zmod:", 0) == 0) {
      auto [a, b] = parse_range(atom.substr(5), atom);
      for (int n = a; n <= b; ++n) corpus.rings.push_back(make_zmod(n));
    } else if (atom == "products:depth2") {
      for (int i = 2; i <= 9; ++i)
        for (int j = 2; j <= 9; ++j)
          corpus.rings.push_back(make_product({make_zmod(i), make_zmod(j)}).ring);
    } else if (atom == "products:depth3") {
      for (int i = 2; i <= 6; ++i)
        for (int j = 2; j <= 6; ++j)
          for (int k = 2; k <= 6; ++k)
            corpus.rings.push_back(
                make_product({make_zmod(i), make_zmod(j), make_zmod(k)}).ring);
    } else if (atom == "quotients") {
      std::vector<RingPtr> base = corpus.rings;
      for (const auto& ring : base)
        for (const auto& ideal : enumerate_ideals(ring).ideals)
          corpus.rings.push_back(make_quotient(ring, ideal).ring);
    } else {
      throw Error("unknown corpus atom \"" + atom + "\"");
    }
  }
  return corpus;
}

ProductCorpus build_product_corpus(int lo2, int hi2, bool include_triples,
                                   int lo3, int hi3) {
  ProductCorpus out;
  for (int i = lo2; i <= hi2; ++i)
    for (int j = lo2; j <= hi2; ++j)
      out.products.push_back(make_product({make_zmod(i), make_zmod(j)}));
  if (include_triples)
    for (int i = lo3; i <= hi3; ++i)
      for (int j = lo3; j <= hi3; ++j)
        for (int k = lo3; k <= hi3; ++k)
          out.products.push_back(
              make_product({make_zmod(i), make_zmod(j), make_zmod(k)}));
  return out;
}

std::vector<SpecPoset> build_poset_corpus(int max_points) {
  std::vector<SpecPoset> out;
  for (int k = 1; k <= max_points; ++k)
    for (auto& p : enumerate_posets(k)) out.push_back(std::move(p));
  return out;
}

}  // namespace spectra
