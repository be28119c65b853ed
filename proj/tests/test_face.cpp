#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qc/complex.hpp"
#include "qc/face.hpp"

using namespace qc;

static Params wreath(int l, int m) { return Params{l, m, true}; }

TEST_CASE("canonicalize the projective-plane face, hats dropped") {
    Params p = wreath(3, 2);
    std::vector<std::set<int>> chain = {
        {}, {1, 4}, {1, 2, 4, 5}, {1, 2, 3, 4, 5, 6}};
    FaceOrbit f = canonicalize(chain, p);
    CHECK(f.support == std::vector<int>{2, 4});
    CHECK(f.profiles == std::vector<Profile>{{1, 2}, {1, 2}});
}

TEST_CASE("canonicalize the empty chain") {
    Params p = wreath(3, 2);
    FaceOrbit f = canonicalize({}, p);
    CHECK(f.is_empty());
    CHECK(f == empty_face(p));
}

TEST_CASE("row-swapped chains share an orbit, row-breaking ones do not") {
    Params p = wreath(3, 2);
    FaceOrbit a = canonicalize({{1, 2}, {1, 2, 3}}, p);
    FaceOrbit b = canonicalize({{4, 5}, {4, 5, 6}}, p);
    CHECK(a == b);
    // {4,5} < {3,4,5} straddles both rows at the top: a different orbit
    FaceOrbit c = canonicalize({{4, 5}, {3, 4, 5}}, p);
    CHECK_FALSE(a == c);
}

TEST_CASE("canonicalize rejects bad input") {
    Params p = wreath(3, 2);
    CHECK_THROWS_AS(canonicalize({{1, 2}, {2, 3}}, p), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{0, 1}}, p), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{1}, {1}}, p), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{7}}, p), std::invalid_argument);
}

TEST_CASE("word_from_permutation decodes saturated chain labels") {
    Params p = wreath(2, 3);
    CHECK(to_string(word_from_permutation({1, 3, 5, 2, 4, 6}, p)) == "123123");
    CHECK(to_string(word_from_permutation({1, 2, 3, 4, 5, 6}, p)) == "112233");
    CHECK(to_string(word_from_permutation({1, 3, 4, 5, 6, 2}, p)) == "122331");
    CHECK_THROWS_AS(word_from_permutation({1, 1, 2, 3, 4, 5}, p), std::invalid_argument);
    CHECK_THROWS_AS(word_from_permutation({1, 2, 3}, p), std::invalid_argument);
}

TEST_CASE("facet enumeration matches the closed count") {
    auto count = [](int l, int m, bool sym) {
        Params p{l, m, sym};
        return enumerate_facets(p).size();
    };
    // (lm)! / ((l!)^m m!)
    CHECK(count(2, 3, true) == 15);
    CHECK(count(3, 2, true) == 10);
    CHECK(count(2, 2, true) == 3);
    CHECK(count(4, 2, true) == 35);
    CHECK(count(2, 4, true) == 105);
    CHECK(count(3, 3, true) == 280);
    CHECK(count(2, 5, true) == 945);
    CHECK(count(1, 1, true) == 1);
    // Young product drops the m! factor
    CHECK(count(2, 2, false) == 6);
    CHECK(count(3, 2, false) == 20);
}

TEST_CASE("facet enumeration is lexicographic and canonical") {
    Params p = wreath(2, 3);
    auto facets = enumerate_facets(p);
    std::vector<std::string> expect = {
        "112233", "112323", "112332", "121233", "121323",
        "121332", "122133", "122313", "122331", "123123",
        "123132", "123213", "123231", "123312", "123321"};
    REQUIRE(facets.size() == expect.size());
    for (size_t i = 0; i < facets.size(); ++i) CHECK(to_string(facets[i]) == expect[i]);

    Params q = wreath(3, 2);
    auto f2 = enumerate_facets(q);
    CHECK(to_string(f2.front()) == "111222");
    CHECK(to_string(f2.back()) == "122211");
    CHECK(std::is_sorted(f2.begin(), f2.end()));
}

TEST_CASE("face enumeration at (2,2): vertices and brute-force face count") {
    Params p = wreath(2, 2);
    auto faces = enumerate_faces(p);

    std::vector<FaceOrbit> vertices;
    for (const auto& f : faces)
        if (f.dim() == 0) vertices.push_back(f);
    REQUIRE(vertices.size() == 4);
    // rank 1 has one orbit; rank 2 has two; rank 3 has one
    CHECK(vertices[0] == face_from_counts({{1}, {0}}, p));
    CHECK(std::count(vertices.begin(), vertices.end(), face_from_counts({{2}, {0}}, p)) == 1);
    CHECK(std::count(vertices.begin(), vertices.end(), face_from_counts({{1}, {1}}, p)) == 1);
    CHECK(vertices[3] == face_from_counts({{2}, {1}}, p));

    // brute force: canonicalize every chain in B_4 and count distinct orbits
    auto chains = oracle::all_chains(4);
    CHECK(chains.size() == 75);  // 74 nonempty chains plus the empty one
    std::set<FaceOrbit> orbits;
    for (const auto& c : chains) orbits.insert(canonicalize(c, p));
    CHECK(orbits.size() == faces.size());

    // every facet appears as a top-dimensional face
    for (const auto& w : enumerate_facets(p)) {
        FaceOrbit top = facet_as_face(w, p);
        CHECK(std::find(faces.begin(), faces.end(), top) != faces.end());
    }
}

TEST_CASE("canonical form is sound and complete against the group action") {
    for (auto [l, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
        Params p = wreath(l, m);
        auto group = oracle::wreath_elements(l, m);
        auto chains = oracle::all_chains(l * m);
        std::map<std::vector<std::vector<int>>, std::set<std::string>> by_orbit;
        for (const auto& c : chains) {
            FaceOrbit f = canonicalize(c, p);
            by_orbit[oracle::orbit_key(c, group)].insert(to_string(f));
        }
        // soundness + completeness: orbits and canonical forms biject
        std::set<std::string> seen;
        for (auto& [key, forms] : by_orbit) {
            CHECK(forms.size() == 1);  // same orbit, same canonical form
            CHECK(!seen.count(*forms.begin()));  // distinct orbits, distinct forms
            seen.insert(*forms.begin());
        }
    }
}

TEST_CASE("young-product canonical forms separate row-swapped chains") {
    Params p{3, 2, false};
    FaceOrbit a = canonicalize({{1, 2}, {1, 2, 3}}, p);
    FaceOrbit b = canonicalize({{4, 5}, {4, 5, 6}}, p);
    CHECK_FALSE(a == b);
    auto group = oracle::young_elements(3, 2);
    auto chains = oracle::all_chains(6);
    std::map<std::vector<std::vector<int>>, std::set<std::string>> by_orbit;
    for (const auto& c : chains)
        by_orbit[oracle::orbit_key(c, group)].insert(to_string(canonicalize(c, p)));
    std::set<std::string> seen;
    for (auto& [key, forms] : by_orbit) {
        CHECK(forms.size() == 1);
        CHECK(!seen.count(*forms.begin()));
        seen.insert(*forms.begin());
    }
}

TEST_CASE("restrict: examples and monotonicity") {
    Params p32 = wreath(3, 2);
    FacetWord w = word_from_string("122112", p32);
    CHECK(restrict(w, {}, p32) == empty_face(p32));
    FaceOrbit f = restrict(w, {3, 5}, p32);
    CHECK(f == face_from_counts({{1, 3}, {2, 2}}, p32));
    CHECK(to_string(f) == "2,2;1,3");

    // single-rank restrictions agree with canonicalizing the subset chain
    for (const auto& facet : enumerate_facets(p32)) {
        auto perm = permutation_from_word(facet, p32);
        for (int r = 1; r <= 5; ++r) {
            std::set<int> s(perm.begin(), perm.begin() + r);
            CHECK(restrict(facet, {r}, p32) == canonicalize({s}, p32));
        }
        // restriction is compatible with nested rank sets
        for (unsigned m2 = 0; m2 < 32; ++m2)
            for (unsigned m1 = m2;; m1 = (m1 - 1) & m2) {
                auto r2 = qc::detail::mask_to_ranks(m2, 5);
                auto r1 = qc::detail::mask_to_ranks(m1, 5);
                CHECK(restrict(facet, r1, p32) ==
                      restrict(restrict(facet, r2, p32), r1, p32));
                if (m1 == 0) break;
            }
    }
    CHECK_THROWS_AS(restrict(w, {6}, p32), std::invalid_argument);
}

TEST_CASE("contains: spec examples and exhaustive (2,2) oracle") {
    Params p32 = wreath(3, 2);
    FacetWord w = word_from_string("122112", p32);
    FaceOrbit g = face_from_counts({{1, 3}, {2, 2}}, p32);
    CHECK(contains(w, g, p32));
    CHECK(contains(w, empty_face(p32), p32));

    Params p = wreath(2, 2);
    auto group = oracle::wreath_elements(2, 2);
    auto faces = enumerate_faces(p);
    for (const auto& facet : enumerate_facets(p)) {
        // all subchains of all representatives of the facet orbit
        auto perm = permutation_from_word(facet, p);
        std::set<FaceOrbit> below;
        for (const auto& gelt : group) {
            std::vector<std::set<int>> rep;
            std::set<int> acc;
            for (int v : perm) {
                acc.insert(gelt[v - 1]);
                if (static_cast<int>(acc.size()) < p.n()) rep.push_back(acc);
            }
            for (unsigned mask = 0; mask < (1u << rep.size()); ++mask) {
                std::vector<std::set<int>> sub;
                for (size_t i = 0; i < rep.size(); ++i)
                    if (mask & (1u << i)) sub.push_back(rep[i]);
                below.insert(canonicalize(sub, p));
            }
        }
        for (const auto& f : faces)
            CHECK(contains(facet, f, p) == (below.count(f) > 0));
    }
}

TEST_CASE("face strings round-trip") {
    Params p = wreath(3, 2);
    for (const auto& f : enumerate_faces(p)) {
        CHECK(face_from_string(to_string(f), p) == f);
    }
    CHECK(face_from_string("", p) == empty_face(p));
    CHECK_THROWS_AS(face_from_string("9,9;1,1", p), std::invalid_argument);
    CHECK_THROWS_AS(face_from_string("1,2", p), std::invalid_argument);
    CHECK_THROWS_AS(word_from_string("121", p), std::invalid_argument);
}

TEST_CASE("resource guard refuses oversized instances") {
    Params p = wreath(5, 4);  // lm = 20
    CHECK_THROWS_AS(enumerate_facets(p), std::runtime_error);
    CHECK_THROWS_AS(enumerate_faces(p), std::runtime_error);
}
