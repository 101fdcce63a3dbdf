#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clusterf/exchange.hpp"

namespace clusterf {

/// One orientation of a canonical Dynkin diagram.
struct CorpusCase {
  CartanType type;
  std::size_t orientation;  // bit e reverses diagram edge e
  IntMatrix matrix;

  /// 1-based arrow list such as "1->2,3->2,3->4".
  std::string arrows() const;
};

/// Types of the given families with rank up to max_rank, each from its
/// minimum rank (A 1, B/C 2, D 4), ordered by rank then family.
std::vector<CartanType> corpus_types(std::size_t max_rank, const std::string& families = "ABCD");

/// Every orientation of every type in corpus_types.
std::vector<CorpusCase> orientation_corpus(std::size_t max_rank, const std::string& families = "ABCD");

}  // namespace clusterf
