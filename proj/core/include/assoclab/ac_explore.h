#ifndef ASSOCLAB_AC_EXPLORE_H_
#define ASSOCLAB_AC_EXPLORE_H_

#include <cstddef>
#include <vector>

#include "assoclab/finite_groupoid.h"
#include "assoclab/words.h"

namespace assoclab {

struct AcClass {
  Word<ElementId> representative;  // shortest, then lexicographically least
  bool has_letter = false;         // some length-1 word lies in the class
  std::size_t size = 0;            // words of length <= max_len in the class
};

struct AcReport {
  std::size_t max_len = 0;
  std::size_t headroom = 0;
  std::size_t words = 0;        // words enumerated, including headroom
  bool complete = true;         // false if max_words cut the enumeration short
  std::vector<AcClass> classes; // ordered by representative
};

inline constexpr std::size_t kDefaultAcHeadroom = 1;

// Union-find over all well-formed words of length <= max_len + headroom,
// joining each word with every contraction of it. Classes are reported for
// words of length <= max_len; the headroom lets two short words meet through
// a longer common expansion. Since only boundedly long detours are seen, the
// class count is an upper bound for the number of classes of the associative
// completion met by short words.
AcReport AcExplore(const FiniteLocalGroupoid& grp, std::size_t max_len,
                   std::size_t max_words = 5'000'000, std::size_t headroom = kDefaultAcHeadroom);

}  // namespace assoclab

#endif  // ASSOCLAB_AC_EXPLORE_H_
