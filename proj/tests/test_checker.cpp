#include <gtest/gtest.h>

#include "generators.hpp"
#include "tropid/checker.hpp"
#include "tropid/error.hpp"
#include "tropid/families.hpp"

using namespace tropid;
using namespace tropid::testing;

namespace {

const TropScalar ninf = TropScalar::bottom();

// Substitutes a word for every letter of `id` (letters a, b).
Identity substitute(const Identity& id, const std::string& a, const std::string& b) {
    auto expand = [&](const Word& w) {
        std::string out;
        for (char c : w.str()) out += c == 'a' ? a : b;
        return Word(out);
    };
    return Identity::make(expand(id.left), expand(id.right));
}

// Top-left embedding of a matrix over the m-chain into the n-chain: 0 on the new diagonal.
TropMatrix extend(const TropMatrix& m, std::size_t n) {
    TropMatrix out = TropMatrix::identity(make_poset(Poset::chain(n)));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

} // namespace

TEST(Checker, KnownVerdicts) {
    const Identity adjan = adjan_identity();
    EXPECT_TRUE(check_identity(adjan, 2).holds);
    EXPECT_TRUE(check_identity(adjan, 1).holds);
    EXPECT_FALSE(check_identity(parse_identity("ab = ba"), 2).holds);
    EXPECT_TRUE(check_identity(parse_identity("ab = ba"), 1).holds);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(check_identity(parse_identity("ab = ab"), n).holds);
    EXPECT_THROW(check_identity(adjan, 0), InvalidArgument);
}

TEST(Checker, CommutativityFailureRecordsProvenance) {
    const Verdict v = check_identity(parse_identity("ab = ba"), 2);
    ASSERT_FALSE(v.holds);
    ASSERT_TRUE(v.failure);
    EXPECT_EQ(v.method, Verdict::Method::PathFamilies);
    EXPECT_EQ(v.failure->family, Failure::Family::Path);
    EXPECT_EQ(v.failure->u.str(), "a");
    EXPECT_EQ(v.failure->path, (std::vector<std::string>{"1", "2"}));
    EXPECT_NE(v.failure->left_value, v.failure->right_value);
    EXPECT_EQ(v.failure->left_poly, "max(x(b,2))");
    EXPECT_EQ(v.failure->right_poly, "max(x(b,1))");

    const Verdict letters = check_ut2_letters(parse_identity("ab = ba"));
    ASSERT_FALSE(letters.holds);
    EXPECT_EQ(letters.failure->letter, 'a');
    EXPECT_EQ(letters.failure->left_poly, "max(0)");
    EXPECT_EQ(letters.failure->right_poly, "max(x(b))");
}

TEST(Checker, NOneIsContentEquality) {
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const Identity id = random_identity(rng, 6, 3);
        EXPECT_EQ(check_identity(id, 1).holds, same_content(id.left, id.right));
    }
}

TEST(Checker, PosetVerdicts) {
    const Identity adjan = adjan_identity();
    EXPECT_TRUE(check_poset(adjan, fmim_poset()).holds);
    EXPECT_TRUE(check_poset(parse_identity("ab = ba"), Poset::antichain(3)).holds);
    EXPECT_FALSE(check_poset(parse_identity("ab = ba"), fmim_poset()).holds);
    EXPECT_THROW(check_poset(adjan, Poset::chain(0)), InvalidArgument);
    Rng rng(2);
    for (int t = 0; t < 200; ++t) {
        const Identity id = random_identity(rng, 6, 2);
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        EXPECT_EQ(check_poset(id, Poset::chain(n)).holds, check_identity(id, n).holds);
    }
}

TEST(Checker, SubstitutionInstancesOfAHoldingIdentityHold) {
    const Identity adjan = adjan_identity();
    for (auto [a, b] : {std::pair{"ab", "b"}, std::pair{"a", "ba"}, std::pair{"aab", "ba"}, std::pair{"b", "a"}}) {
        const Identity id = substitute(adjan, a, b);
        EXPECT_TRUE(check_identity(id, 2).holds) << id.to_string();
        EXPECT_TRUE(check_ut2_letters(id).holds) << id.to_string();
        EXPECT_TRUE(check_identity(id, 2, {true}).holds) << id.to_string();
    }
}

TEST(Checker, ThreeRoutesAgreeAtTwo) {
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        const Identity id = random_same_content_identity(rng, static_cast<std::size_t>(uniform_int(rng, 1, 8)), "ab");
        const bool path = check_identity(id, 2).holds;
        EXPECT_EQ(check_ut2_letters(id).holds, path) << id.to_string();
        const Verdict fast = check_identity(id, 2, {true});
        EXPECT_EQ(fast.method, Verdict::Method::TwoLetterFastPath);
        EXPECT_EQ(fast.holds, path) << id.to_string();
    }
    EXPECT_THROW(check_ut2_two_letter(parse_identity("abc = cba")), InvalidArgument);
}

TEST(Checker, HoldingImpliesSameContent) {
    Rng rng(4);
    for (int t = 0; t < 300; ++t) {
        const Identity id = random_identity(rng, 7, 2);
        if (check_identity(id, 2).holds) EXPECT_TRUE(same_content(id.left, id.right)) << id.to_string();
    }
}

TEST(Checker, VerdictsAreMonotoneInN) {
    Rng rng(5);
    for (int t = 0; t < 150; ++t) {
        const Identity id = random_same_content_identity(rng, static_cast<std::size_t>(uniform_int(rng, 2, 9)), "ab");
        const bool h3 = check_identity(id, 3).holds, h2 = check_identity(id, 2).holds;
        if (h3) EXPECT_TRUE(h2) << id.to_string();
        if (!h2) {
            // A UT_2 falsifier extends to one in UT_3.
            Witness w = falsifying_witness(id, 2);
            std::map<Letter, TropMatrix> big;
            for (const auto& [c, m] : std::get<MatrixWitness>(w.data).assignment) big.emplace(c, extend(m, 3));
            EXPECT_TRUE(make_matrix_witness(id, Witness::Model::UpperTriangular, big).sides_differ());
            EXPECT_FALSE(h3);
        }
    }
}

TEST(Witness, CommutativityUT2) {
    const Identity id = parse_identity("ab = ba");
    const Witness w = falsifying_witness(id, 2);
    EXPECT_TRUE(verify_witness(id, w));
    const auto& m = std::get<MatrixWitness>(w.data);
    EXPECT_EQ(m.coordinate, std::make_pair(std::size_t{0}, std::size_t{1}));
    EXPECT_NE(m.left.at(0, 1), m.right.at(0, 1));
    EXPECT_THROW(falsifying_witness(adjan_identity(), 2), PreconditionError);
}

TEST(Witness, VerifyRejectsNonFalsifiersAndMissingLetters) {
    const Identity id = parse_identity("ab = ba");
    const auto c2 = make_poset(Poset::chain(2));
    const auto I = TropMatrix::identity(c2);
    EXPECT_FALSE(verify_witness(id, make_matrix_witness(id, Witness::Model::UpperTriangular, {{'a', I}, {'b', I}})));
    const auto A = TropMatrix::over_chain({{1, 0}, {ninf, 0}}), B = TropMatrix::over_chain({{0, 0}, {ninf, 1}});
    EXPECT_TRUE(verify_witness(id, make_matrix_witness(id, Witness::Model::UpperTriangular, {{'a', A}, {'b', B}})));
    Witness tampered = make_matrix_witness(id, Witness::Model::UpperTriangular, {{'a', A}, {'b', B}});
    std::get<MatrixWitness>(tampered.data).left = I;
    EXPECT_FALSE(verify_witness(id, tampered));
    Witness partial = tampered;
    std::get<MatrixWitness>(partial.data).assignment.erase('b');
    EXPECT_THROW(verify_witness(id, partial), InvalidArgument);
}

TEST(Witness, EveryFailureYieldsAVerifiedWitness) {
    Rng rng(6);
    int failures = 0;
    for (int t = 0; t < 200; ++t) {
        const Identity id = random_identity(rng, 8, 3);
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        const Verdict v = check_identity(id, n);
        if (v.holds) continue;
        ++failures;
        const Witness w = falsifying_witness(id, n);
        EXPECT_TRUE(verify_witness(id, w)) << id.to_string();
        EXPECT_EQ(std::get<MatrixWitness>(w.data).left.dim(), n);
    }
    EXPECT_GT(failures, 50);
}

TEST(Witness, PosetWitnessesLiveOnTheIndex) {
    const Identity id = parse_identity("ab = ba");
    const auto p = make_poset(fmim_poset());
    const Witness w = falsifying_witness(id, p);
    EXPECT_EQ(w.model, Witness::Model::Poset);
    EXPECT_TRUE(verify_witness(id, w));
    for (const auto& [c, m] : std::get<MatrixWitness>(w.data).assignment) EXPECT_TRUE(m.in_gamma());
}

TEST(Witness, BicyclicTransfer) {
    const Identity id = parse_identity("ab = ba");
    const Witness w = bicyclic_witness(id);
    EXPECT_EQ(w.model, Witness::Model::Bicyclic);
    EXPECT_TRUE(verify_witness(id, w));
    EXPECT_THROW(bicyclic_witness(adjan_identity()), PreconditionError);
}

TEST(Witness, BicyclicContentMismatchSendsOneLetterToP) {
    const Identity id = parse_identity("aab = ba");
    const Witness w = bicyclic_witness(id);
    const auto& b = std::get<BicyclicWitness>(w.data);
    EXPECT_EQ(b.assignment.at('a'), bicyclic_p());
    EXPECT_EQ(b.assignment.at('b'), bicyclic_one());
    EXPECT_EQ(b.left, (Bicyclic{0, 2}));
    EXPECT_EQ(b.right, (Bicyclic{0, 1}));
}

TEST(Witness, BicyclicTransferOnRandomFailures) {
    Rng rng(7);
    int transfers = 0;
    for (int t = 0; t < 300; ++t) {
        const Identity id = random_same_content_identity(rng, static_cast<std::size_t>(uniform_int(rng, 2, 10)), "abc");
        if (check_ut2_letters(id).holds) continue;
        ++transfers;
        const Witness w = bicyclic_witness(id);
        EXPECT_TRUE(verify_witness(id, w)) << id.to_string();
    }
    EXPECT_GT(transfers, 100);
}

TEST(Witness, ScaledSatisfyingMorphismsStillSatisfy) {
    Rng rng(8);
    int satisfied = 0;
    const auto c2 = make_poset(Poset::chain(2));
    for (int t = 0; t < 3000 && satisfied < 200; ++t) {
        const Identity id = random_same_content_identity(rng, static_cast<std::size_t>(uniform_int(rng, 2, 6)), "ab");
        std::map<Letter, TropMatrix> phi;
        for (char c : std::string("ab")) phi.emplace(c, random_gamma_matrix(rng, c2, 1, 0.5));
        if (!(eval_word(id.left, phi) == eval_word(id.right, phi))) continue;
        ++satisfied;
        std::map<Letter, TropMatrix> scaled;
        for (const auto& [c, m] : phi) scaled.emplace(c, scale_matrix(random_rational(rng, 5, 4), m));
        EXPECT_EQ(eval_word(id.left, scaled), eval_word(id.right, scaled)) << id.to_string();
    }
    EXPECT_GE(satisfied, 200);
}
