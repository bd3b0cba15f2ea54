#include "rat/suites.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rat/closed_forms.hpp"
#include "rat/markov.hpp"
#include "rat/mct.hpp"
#include "rat/tableau.hpp"

namespace rat {

namespace {

std::vector<Word> words_up_to(std::size_t max_n) {
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (Word& w : all_words(n)) out.push_back(std::move(w));
    return out;
}

void expect(SuiteResult& s, bool ok, const std::string& what) {
    ++s.checked;
    if (!ok) s.failures.push_back(what);
}

std::string sector(std::size_t n, std::size_t r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

Word block_word(std::size_t a, std::size_t b, std::size_t c) {
    std::vector<Letter> letters(a, Letter::D);
    letters.insert(letters.end(), b, Letter::A);
    letters.insert(letters.end(), c, Letter::E);
    return Word(std::move(letters));
}

}  // namespace

SuiteResult ansatz_suite(std::size_t max_n, const Limits& limits) {
    SuiteResult s{"ansatz", 0, {}};
    AnsatzReport report = verify_ansatz_identities(max_n, limits);
    for (const AnsatzResult& r : report.identities) {
        s.checked += r.checked;
        for (const std::string& f : r.failures) s.failures.push_back(std::string(ansatz_identity_name(r.identity)) + " " + f);
    }
    return s;
}

SuiteResult tiling_independence_suite(std::size_t max_n, const Limits& limits) {
    SuiteResult s{"tiling-independence", 0, {}};
    for (const Word& w : words_up_to(max_n)) {
        check_limit("diagram area", diagram_area(w), limits.max_area);
        DiagramPtr d = make_diagram(w);
        FlipGraph g = enumerate_tilings(d, limits);
        const Polynomial reference = weight_of_word(g.tilings.front(), limits);
        bool same = true, heights = true;
        for (std::size_t i = 0; i < g.tilings.size(); ++i) {
            if (weight_of_word(g.tilings[i], limits) != reference) same = false;
            if (height(g.tilings[i]) != g.distance[i]) heights = false;
        }
        const Tiling top = maximal_tiling(d);
        const bool connected =
            std::find(g.tilings.begin(), g.tilings.end(), top) != g.tilings.end();
        expect(s, same, w.to_string() + ": weights differ between tilings");
        expect(s, heights, w.to_string() + ": height differs from flip distance");
        expect(s, connected, w.to_string() + ": maximal tiling unreachable");
    }
    return s;
}

SuiteResult bijection_suite(std::size_t max_n, const Limits& limits) {
    SuiteResult s{"bijection", 0, {}};
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t r = 0; r <= n; ++r) {
            BijectionReport report = verify_bijection(n, r, limits);
            for (const BijectionWordResult& w : report.words)
                expect(s, w.ok(), w.word.to_string() + ": " + std::to_string(w.rat_count) + " q=0 fillings, " +
                                      std::to_string(w.image_count) + " images, " + std::to_string(w.mct_count) +
                                      " tableaux");
            expect(s, report.total_mct() == mct_count(n, r), sector(n, r) + ": tableau total differs from mct_count");
        }
    }
    return s;
}

SuiteResult closed_forms_suite(std::size_t max_n, const Limits& limits) {
    SuiteResult s{"closed-forms", 0, {}};
    const Binding ones(1, 1, 1);
    const std::vector<std::pair<Rational, Rational>> samples{
        {Rational(1, 2), Rational(1, 3)}, {Rational(2, 3), Rational(1, 5)}, {Rational(1), Rational(3, 7)}};
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t r = 0; r <= n; ++r) {
            const std::string tag = sector(n, r);
            const Polynomial z = partition_function(n, r, limits);
            expect(s, z.substitute(Symbol::Q, Polynomial(1)) == z_q1_closed(n, r), tag + ": Z at q=1");
            expect(s, Integer(z.evaluate(ones).get_num()) == equivalence_class_count(n, r), tag + ": class count");

            const auto refined = refined_partition_function(n, r, limits);
            auto closed = z_x_closed(n, r).split_by(Symbol::X);
            expect(s, refined == closed, tag + ": refined Z_k against the x-product");
            if (n + 1 <= max_n)
                expect(s, z_x_recursion(n, r) == z_x_closed(n + 1, r), tag + ": x-recursion");

            const Polynomial z0 = z.substitute(Symbol::Q, Polynomial(0));
            expect(s, Integer(z0.evaluate(ones).get_num()) == mct_count(n, r), tag + ": mct_count");
            Integer by_k_total = 0;
            std::map<std::size_t, Integer> enumerated_by_k;
            for (const Word& w : words_with(n, r))
                enumerated_by_k[w.k()] += weight_of_word(w, limits).substitute(Symbol::Q, Polynomial(0)).evaluate(ones).get_num();
            for (std::size_t k = 0; k + r <= n; ++k) {
                by_k_total += mct_count_by_k(n, r, k);
                expect(s, enumerated_by_k[k] == mct_count_by_k(n, r, k), tag + ": mct_count_by_k k=" + std::to_string(k));
            }
            expect(s, by_k_total == mct_count(n, r), tag + ": sum over k");
            if (n > r) {
                for (const auto& [a, b] : samples)
                    expect(s, z0_closed(n, r, a, b) == z0.evaluate(Binding(a, b, 0)),
                           tag + ": z0 at alpha=" + to_string(a) + " beta=" + to_string(b));
            }
        }
    }
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b)
            for (std::size_t c = 0; c <= 3; ++c) {
                if (a + b + c == 0 || a + b + c > max_n) continue;
                const Word w = block_word(a, b, c);
                expect(s, Integer(static_cast<unsigned long>(enumerate_tilings(make_diagram(w), limits).tilings.size())) ==
                              macmahon_box(a, b, c),
                       w.to_string() + ": tiling count against the box formula");
            }
    return s;
}

SuiteResult main_theorem_suite(std::size_t max_n, const Limits& limits) {
    SuiteResult s{"main-theorem", 0, {}};
    const std::vector<ChainParams> params{{1, 1, 1},
                                          {1, 1, 0},
                                          {Rational(1, 2), Rational(1, 3), Rational(1, 5)},
                                          {Rational(2, 3), Rational(1, 5), 1}};
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t r = 0; r <= n; ++r)
            for (const ChainParams& p : params) {
                MainTheoremReport report = verify_main_theorem(n, r, p, limits);
                expect(s, report.ok(), sector(n, r) + " at (" + to_string(p.alpha) + "," + to_string(p.beta) + "," +
                                           to_string(p.q) + "): " + std::to_string(report.mismatches()) +
                                           " states differ");
            }
    return s;
}

SuiteResult fillings_suite(std::size_t max_n, const Limits& limits) {
    SuiteResult s{"fillings", 0, {}};
    for (const Word& w : words_up_to(max_n)) {
        const Tiling t = minimal_tiling(make_diagram(w));
        std::vector<Filling> fast = enumerate_fillings(t, limits);
        std::vector<Filling> slow = brute_force_fillings(t, limits);
        auto key = [](const Filling& f) { return f.marks(); };
        std::vector<std::vector<Mark>> a, b;
        for (const Filling& f : fast) a.push_back(key(f));
        for (const Filling& f : slow) b.push_back(key(f));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        expect(s, a == b, w.to_string() + ": strip enumeration differs from brute force");

        Polynomial normal;
        for (const Filling& f : fast) normal += normal_form(f).monomial(w.size()).to_polynomial();
        expect(s, normal == weight_of_word(t, limits), w.to_string() + ": normal-form sum differs from weight");
    }
    return s;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ansatz",      "tiling-independence", "bijection",
                                                "closed-forms", "main-theorem",       "fillings"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::size_t max_n, const Limits& limits) {
    if (name == "ansatz") return ansatz_suite(max_n, limits);
    if (name == "tiling-independence") return tiling_independence_suite(max_n, limits);
    if (name == "bijection") return bijection_suite(max_n, limits);
    if (name == "closed-forms") return closed_forms_suite(max_n, limits);
    if (name == "main-theorem") return main_theorem_suite(max_n, limits);
    if (name == "fillings") return fillings_suite(max_n, limits);
    throw std::invalid_argument("unknown suite " + name);
}

}  // namespace rat
