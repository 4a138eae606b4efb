#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "bookturan/search.hpp"

namespace bookturan {

// Append-only store of exact search outcomes, one JSON object per line,
// keyed by SearchProblem::key(). Inexact outcomes are never written.
class SearchCache {
  public:
    explicit SearchCache(std::filesystem::path dir);

    // BOOKTURAN_CACHE_DIR when set, otherwise $HOME/.cache/bookturan,
    // otherwise ./.bookturan-cache.
    static std::filesystem::path default_dir();

    // First stored outcome for the problem; corrupt lines are skipped with a
    // note on `warnings` when given.
    std::optional<SearchOutcome> lookup(const SearchProblem& p,
                                        std::ostream* warnings = nullptr) const;

    // Appends one line. No-op when the outcome is inexact or the key is
    // already stored.
    void store(const SearchProblem& p, const SearchOutcome& outcome);

    std::filesystem::path file() const;

  private:
    std::filesystem::path dir_;
};

}  // namespace bookturan
