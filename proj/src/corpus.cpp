#include "clusterf/corpus.hpp"

#include <sstream>

namespace clusterf {

std::string CorpusCase::arrows() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& a : quiver_of(matrix).arrows) {
    os << (first ? "" : ",") << a.from + 1 << "->" << a.to + 1;
    first = false;
  }
  return os.str();
}

std::vector<CartanType> corpus_types(std::size_t max_rank, const std::string& families) {
  std::vector<CartanType> out;
  for (std::size_t n = 1; n <= max_rank; ++n) {
    for (char letter : families) {
      const CartanType t{family_from_letter(letter), n};
      const std::size_t min_rank = t.family == CartanFamily::A ? 1 : t.family == CartanFamily::D ? 4 : 2;
      if (n >= min_rank) out.push_back(t);
    }
  }
  return out;
}

std::vector<CorpusCase> orientation_corpus(std::size_t max_rank, const std::string& families) {
  std::vector<CorpusCase> out;
  for (const auto& t : corpus_types(max_rank, families)) {
    const auto mats = all_orientations(t);
    for (std::size_t o = 0; o < mats.size(); ++o) out.push_back({t, o, mats[o]});
  }
  return out;
}

}  // namespace clusterf
