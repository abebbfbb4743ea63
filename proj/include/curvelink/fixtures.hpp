// fixtures.hpp -- versioned corpus of pinned invariant values.
//
// Fixtures are JSON data files (one per topic) holding polynomials in the
// canonical text form plus small scalar facts; they are diffable without
// recompiling anything.  The verifier re-derives every value that the
// library can derive (censuses at small field sizes, closed forms, algebraic
// identities between stored blocks) and reports diffs against the stored
// text.  A few entries are pinned reference values whose full re-derivation
// is out of budget; those are cross-checked through identities instead and
// tagged accordingly.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvelink/exactpoly.hpp"

namespace curvelink {

struct fixture {
    std::string id;
    std::string title;
    std::string source;  // where the value comes from (closed form, table, ...)
    std::string ring;    // ring descriptor, "" when not applicable
    std::vector<std::string> tags;
    std::map<std::string, std::string> polys;    // key -> canonical text
    std::map<std::string, std::string> scalars;  // key -> printed value
    std::string path;                            // file it was loaded from
};

// load every *.json under dir, sorted by id; throws calc_error on bad files
std::vector<fixture> load_fixture_dir(const std::string& dir);
const fixture* find_fixture(const std::vector<fixture>& all, const std::string& id);
// $CURVELINK_FIXTURES or "fixtures"
std::string default_fixture_dir();

// parsed polynomial entry (throws calc_error when the key is missing)
exact_poly fixture_poly(const fixture& f, const std::string& key);
long long fixture_int(const fixture& f, const std::string& key);

struct fixture_diff {
    std::string id;
    std::string key;
    std::string expected;  // stored text
    std::string derived;   // re-derived text
};

struct verify_options {
    int jobs = 1;
    long long node_budget = 4'000'000;
    bool heavy = false;  // include multi-minute re-derivations
};

// re-derive / cross-check fixtures (all of them, or just only_id); returns
// diffs, empty means pass.  checked collects "id key" lines actually tested.
std::vector<fixture_diff> verify_fixtures(const std::vector<fixture>& all,
                                          const std::string& only_id, const verify_options& opt,
                                          std::vector<std::string>* checked = nullptr);

}  // namespace curvelink
