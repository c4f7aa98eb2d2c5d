#include "jamesloop/acceptance.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "jamesloop/corpus.hpp"
#include "jamesloop/errors.hpp"
#include "jamesloop/james.hpp"
#include "jamesloop/straightening.hpp"
#include "jamesloop/suspension_paths.hpp"

namespace jamesloop
{

namespace
{

struct Tally
{
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what)
    {
        ++cases;
        if (ok)
            return;
        if (failures == 0)
            first_failure = what;
        ++failures;
    }

    CriterionResult finish(int number, std::string name) const
    {
        CriterionResult r{number, std::move(name), failures == 0, {}};
        r.detail = std::to_string(cases - failures) + "/" + std::to_string(cases) + " checks";
        if (failures)
            r.detail += "; first failure: " + first_failure;
        return r;
    }
};

const std::vector<FieldSpec>& both_fields()
{
    static const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
    return fields;
}

struct NamedComplex
{
    std::string name;
    CubicalSet complex;
};

std::vector<NamedComplex> test_bases()
{
    return {{"circle", complexes::circle()},
            {"wedge", complexes::wedge_of_circles(2)},
            {"torus", complexes::torus()}};
}

std::string word_text(const JamesWord& w)
{
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < w.letters.size(); ++k)
    {
        out << (k ? "," : "") << w.letters[k].cube;
        for (const Rational& c : w.letters[k].coords)
            out << ":" << format_rational(c);
    }
    out << ")";
    return out.str();
}

std::vector<XPrimeLetter> as_xprime(const JamesWord& w)
{
    return {w.letters.begin(), w.letters.end()};
}

std::vector<XPrimeLetter> as_xprime(const std::vector<RealizationPoint>& w)
{
    return {w.begin(), w.end()};
}

// Reference value of phi_t^{-/+} at a point, straight from the formula
// [(s, x)] -> [((t+1)s -/+ t, x)].
SuspensionPoint phi_formula(const SuspensionSpace& space, const SuspensionPoint& p, Sign sign,
                            const Rational& t)
{
    if (p.star)
        return p;
    Rational h = (t + 1) * p.h + (sign == Sign::minus ? Rational(-t) : t);
    if (h <= -1 || h >= 1)
        return SuspensionPoint::basepoint();
    return space.point(h, p.x);
}

std::vector<Rational> sample_times(const Rational& duration, int count)
{
    std::vector<Rational> out;
    for (int k = 0; k < count; ++k)
        out.push_back(Rational(duration * k / (count - 1)));
    return out;
}

bool all_star(const MoorePath& path)
{
    for (const Segment& s : path.segments)
        if (!s.is_star())
            return false;
    return true;
}

} // namespace

HilbertSeries brute_force_tensor_dims(const GradedDims& generators, int degree, int max_length)
{
    // Generator list with one entry per basis element, then depth-first
    // enumeration of every word of total degree <= degree.
    std::vector<int> gen_degrees;
    for (const auto& [d, count] : generators.dims)
    {
        if (d <= 0 && count > 0)
            throw DomainError("generators must live in positive degrees");
        for (std::int64_t k = 0; k < count; ++k)
            gen_degrees.push_back(d);
    }
    HilbertSeries out;
    out.coefficients.assign(static_cast<std::size_t>(degree) + 1, 0);
    std::function<void(int, int)> extend = [&](int total, int length) {
        ++out.coefficients[static_cast<std::size_t>(total)];
        if (max_length >= 0 && length == max_length)
            return;
        for (int d : gen_degrees)
            if (total + d <= degree)
                extend(total + d, length + 1);
    };
    extend(0, 0);
    return out;
}

CriterionResult check_homology(std::uint64_t)
{
    using Matrix = std::vector<std::vector<std::int64_t>>;
    struct Hand
    {
        std::string name;
        CubicalSet complex;
        std::vector<Matrix> boundary;
        std::map<int, std::int64_t> dims;
    };
    const std::vector<Hand> cases{
        {"circle", complexes::circle(), {{}, {{0}}}, {{0, 1}, {1, 1}}},
        {"wedge", complexes::wedge_of_circles(2), {{}, {{0, 0}}}, {{0, 1}, {1, 2}}},
        {"torus", complexes::torus(), {{}, {{0, 0}}, {{0}, {0}}}, {{0, 1}, {1, 2}, {2, 1}}},
        {"interval", complexes::interval(), {{}, {{-1}, {1}}}, {{0, 1}, {1, 0}}},
    };
    Tally tally;
    for (const Hand& h : cases)
        for (const FieldSpec& field : both_fields())
        {
            const std::string tag = h.name + " over " + field.name();
            ChainComplex chains = chain_complex(h.complex, field);
            tally.expect(chains.boundary == h.boundary, tag + ": boundary matrices");
            tally.expect(boundary_squared_vanishes(chains), tag + ": d^2 = 0");
            GradedDims dims = betti(h.complex, field);
            bool ok = true;
            for (int n = 0; n <= dims.truncation; ++n)
                ok = ok && dims.at(n) == (h.dims.count(n) ? h.dims.at(n) : 0);
            tally.expect(ok, tag + ": dimensions");
        }
    return tally.finish(1, "homology of circle, wedge, torus over Q and F2");
}

CriterionResult check_suspension_iso(std::uint64_t)
{
    Tally tally;
    for (const auto& [name, base] : test_bases())
        for (const FieldSpec& field : both_fields())
        {
            GradedDims below = reduced(betti(base, field));
            GradedDims above = reduced(betti(suspension_model(base).complex, field));
            const int top = std::max(below.truncation + 1, above.truncation);
            bool ok = above.at(0) == 0;
            for (int k = 0; k < top; ++k)
                ok = ok && above.at(k + 1) == below.at(k);
            tally.expect(ok, name + " over " + field.name());
        }
    return tally.finish(2, "reduced suspension isomorphism");
}

CriterionResult check_loop_homology(std::uint64_t)
{
    struct Expected
    {
        CubicalSet base;
        std::string name;
        int degree;
        std::vector<std::int64_t> series;
    };
    std::vector<std::int64_t> ones(11, 1), powers;
    for (int k = 0; k <= 10; ++k)
        powers.push_back(std::int64_t{1} << k);
    const std::vector<Expected> cases{
        {complexes::circle(), "circle", 10, ones},
        {complexes::wedge_of_circles(2), "wedge", 10, powers},
        {complexes::torus(), "torus", 5, {1, 2, 5, 12, 29, 70}},
    };
    Tally tally;
    for (const Expected& e : cases)
        for (const FieldSpec& field : both_fields())
        {
            const std::string tag = e.name + " over " + field.name();
            HilbertSeries series = loop_space_homology(e.base, field, e.degree);
            GradedDims v = reduced(betti(e.base, field));
            tally.expect(series.coefficients == e.series, tag + ": expected series");
            tally.expect(series == brute_force_tensor_dims(v, e.degree), tag + ": word count");
            tally.expect(verify_tensor_characterization(v, series), tag + ": V⊗A = Ã");
        }
    return tally.finish(3, "loop-space homology is the tensor algebra");
}

CriterionResult check_sec_section(std::uint64_t seed)
{
    CorpusGenerator gen(seed ^ 0x4);
    std::vector<NamedComplex> bases = test_bases();
    std::vector<SuspensionSpace> spaces;
    for (const auto& b : bases)
        spaces.emplace_back(b.complex);
    Tally tally;
    for (int k = 0; k < 100; ++k)
    {
        const SuspensionSpace& space = spaces[static_cast<std::size_t>(k) % spaces.size()];
        std::vector<XPrimeLetter> word = gen.xprime_word(space.base(), 6);
        JamesWord expected = j_retract(space.base(), word);
        JamesWord got = sec(space, j_beta_prime(space, word));
        tally.expect(got == expected, "case " + std::to_string(k) + ": expected " +
                                          word_text(expected) + ", got " + word_text(got));
    }
    return tally.finish(4, "sec o J(beta') = identity on words");
}

CriterionResult check_sec_homomorphism(std::uint64_t seed)
{
    CorpusGenerator gen(seed ^ 0x5);
    std::vector<NamedComplex> bases = test_bases();
    std::vector<SuspensionSpace> spaces;
    for (const auto& b : bases)
        spaces.emplace_back(b.complex);
    Tally tally;
    for (int k = 0; k < 100; ++k)
    {
        const SuspensionSpace& space = spaces[static_cast<std::size_t>(k) % spaces.size()];
        const std::string tag = "pair " + std::to_string(k);
        MoorePath alpha = gen.increasing_loop(space, gen.word(space.base(), 4));
        MoorePath beta = k % 2 ? gen.plateau_loop(space, gen.word(space.base(), 4))
                               : gen.increasing_loop(space, gen.word(space.base(), 4));
        JamesWord sa = sec(space, alpha);
        JamesWord sb = sec(space, beta);
        tally.expect(sec(space, space.concat(alpha, beta)) == multiply(space.base(), sa, sb),
                     tag + ": sec(a*b) != sec(a)sec(b)");
        tally.expect(sec(space, space.reparam(alpha, gen.time_map(space, alpha))) == sa,
                     tag + ": reparametrization changed sec(a)");
        tally.expect(sec(space, space.reparam(beta, gen.time_map(space, beta))) == sb,
                     tag + ": reparametrization changed sec(b)");
    }
    return tally.finish(5, "sec is a reparametrization-invariant monoid map");
}

CriterionResult check_make_increasing(std::uint64_t seed)
{
    CorpusGenerator gen(seed ^ 0x6);
    std::vector<NamedComplex> bases = test_bases();
    std::vector<SuspensionSpace> spaces;
    for (const auto& b : bases)
        spaces.emplace_back(b.complex);
    Tally tally;
    for (int k = 0; k < 100; ++k)
    {
        const SuspensionSpace& space = spaces[static_cast<std::size_t>(k) % spaces.size()];
        std::vector<RealizationPoint> word = gen.word(space.base(), 5);
        MoorePath loop = k % 4 == 3 ? gen.increasing_loop(space, word) : gen.plateau_loop(space, word);
        JamesWord before = sec(space, loop);
        for (const Rational& eps : {Rational(1, 4), Rational(1, 2)})
        {
            const std::string tag =
                "loop " + std::to_string(k) + " eps " + format_rational(eps);
            MoorePath out = space.make_increasing(loop, eps);
            tally.expect(space.is_loop(out) && space.verify_directed(out, XStructure::directed),
                         tag + ": not a directed loop");
            tally.expect(space.is_strictly_increasing(out), tag + ": not strictly increasing");
            tally.expect(sec(space, out) == before, tag + ": sec changed");
        }
    }
    return tally.finish(6, "make_increasing gives strictly increasing loops, same sec");
}

CriterionResult check_straightening(std::uint64_t seed)
{
    CorpusGenerator gen(seed ^ 0x7);
    std::vector<NamedComplex> bases = test_bases();
    std::vector<SuspensionSpace> spaces;
    for (const auto& b : bases)
        spaces.emplace_back(b.complex);
    Tally tally;
    for (int k = 0; k < 100; ++k)
    {
        const SuspensionSpace& space = spaces[static_cast<std::size_t>(k) % spaces.size()];
        const std::string tag = "loop " + std::to_string(k);

        MoorePath image = j_beta_prime(space, as_xprime(gen.word(space.base(), 6)));
        tally.expect(full_straighten(space, image).result == image,
                     tag + ": J(beta') image moved");

        MoorePath loop = gen.increasing_loop(space, gen.word(space.base(), 6));
        JamesWord word = sec(space, loop);
        StraightenResult res = full_straighten(space, loop);
        tally.expect(normalize_part_durations(space, res.result) ==
                         j_beta_prime(space, as_xprime(word)),
                     tag + ": result is not J(beta')(sec)");
        bool frames_ok = true;
        for (const MoorePath& frame : res.frames)
            frames_ok = frames_ok && space.is_loop(frame) &&
                        space.verify_directed(frame, XStructure::directed) &&
                        sec(space, frame) == word;
        tally.expect(frames_ok, tag + ": a frame is not a directed loop with the same word");
    }
    return tally.finish(7, "straightening retracts onto J(beta') images");
}

CriterionResult check_contraction(std::uint64_t seed)
{
    CorpusGenerator gen(seed ^ 0x8);
    std::vector<NamedComplex> bases = test_bases();
    bases.push_back({"interval", complexes::interval()});
    std::vector<SuspensionSpace> spaces;
    for (const auto& b : bases)
        spaces.emplace_back(b.complex);
    Tally tally;
    for (int k = 0; k < 50; ++k)
    {
        const SuspensionSpace& space = spaces[static_cast<std::size_t>(k) % spaces.size()];
        const std::string tag = "loop " + std::to_string(k);
        MoorePath loop = gen.increasing_loop(space, gen.word(space.base(), 5));
        std::vector<MoorePath> frames = contract_to_constant(space, loop);
        bool frames_ok = !frames.empty() && frames.front() == space.normalize(loop);
        for (const MoorePath& frame : frames)
            frames_ok = frames_ok && space.is_loop(frame) &&
                        space.verify_directed(frame, XStructure::directed);
        tally.expect(frames_ok, tag + ": a frame is not a directed loop");
        tally.expect(all_star(frames.back()), tag + ": did not end at the constant loop");
    }

    for (const CubicalSet& split : {complexes::two_components(), complexes::two_points()})
    {
        SuspensionSpace space(split);
        MoorePath loop = space.beta(gen.letter(split));
        bool raised = false;
        try
        {
            contract_to_constant(space, loop);
        }
        catch (const DomainError&)
        {
            raised = true;
        }
        tally.expect(raised, "no error on a disconnected complex");
    }
    return tally.finish(8, "contraction to the constant loop");
}

CriterionResult check_homotopy_endpoints(std::uint64_t seed)
{
    CorpusGenerator gen(seed ^ 0x9);
    std::vector<NamedComplex> bases = test_bases();
    std::vector<SuspensionSpace> spaces;
    for (const auto& b : bases)
        spaces.emplace_back(b.complex);
    constexpr int samples = 20;
    Tally tally;

    auto pointwise = [&](const SuspensionSpace& space, const MoorePath& got,
                         const Rational& duration,
                         const std::function<SuspensionPoint(const Rational&)>& want,
                         const std::string& tag) {
        bool ok = got.duration() == duration;
        for (const Rational& s : sample_times(duration, samples))
            ok = ok && space.evaluate(got, s) == want(s);
        tally.expect(ok, tag);
    };

    for (int k = 0; k < 12; ++k)
    {
        const SuspensionSpace& space = spaces[static_cast<std::size_t>(k) % spaces.size()];
        const std::string tag = "case " + std::to_string(k);
        MoorePath alpha = gen.increasing_loop(space, gen.word(space.base(), 3));
        if (alpha.empty())
            alpha = space.star_path(1);
        const Rational T = alpha.duration();
        RealizationPoint x = gen.letter(space.base());
        auto at = [&](const Rational& s) { return space.evaluate(alpha, s); };
        // beta_x^{-1,0} run from time T.
        auto ramp = [&](const Rational& s) {
            Rational h = -1 + (s - T);
            return h <= -1 ? SuspensionPoint::basepoint() : space.point(h, x);
        };

        for (const Sign sign : {Sign::minus, Sign::plus})
            for (const Rational& t : {Rational(0), Rational(1, 3), Rational(1)})
                pointwise(space, space.apply_phi(alpha, sign, t), T,
                          [&](const Rational& s) { return phi_formula(space, at(s), sign, t); },
                          tag + ": phi formula");

        // H_0 = id and H_1 = GF on (x, alpha).
        auto h0 = space.gf_homotopy(x, alpha, 0);
        tally.expect(h0.first == x, tag + ": H_0 moved x");
        pointwise(space, h0.second, T, at, tag + ": H_0 != id");
        auto h1 = space.gf_homotopy(x, alpha, 1);
        tally.expect(h1.first == x, tag + ": H_1 moved x");
        pointwise(
            space, h1.second, T + 1,
            [&](const Rational& s) {
                return phi_formula(space, s <= T ? at(s) : ramp(s), Sign::minus, 1);
            },
            tag + ": H_1 != GF");
        auto gf = space.G_pair(space.F_pair(x, alpha));
        tally.expect(gf.first == x && gf.second == h1.second, tag + ": GF composite differs");

        // H'_0 = id and H'_1 = FG on gamma = alpha * beta_x^{-1,0}.
        MoorePath gamma = space.F_pair(x, alpha);
        auto gamma_at = [&](const Rational& s) { return s <= T ? at(s) : ramp(s); };
        pointwise(space, space.fg_homotopy(gamma, 0), T + 1, gamma_at, tag + ": H'_0 != id");
        pointwise(
            space, space.fg_homotopy(gamma, 1), T + 2,
            [&](const Rational& s) {
                if (s <= T + 1)
                    return phi_formula(space, gamma_at(s), Sign::minus, 1);
                return ramp(s - 1);
            },
            tag + ": H'_1 != FG");
        auto g = space.G_pair(gamma);
        tally.expect(space.F_pair(g.first, g.second) == space.fg_homotopy(gamma, 1),
                     tag + ": FG composite differs");
    }
    return tally.finish(9, "phi, F, G homotopy endpoints");
}

CriterionResult check_retraction(std::uint64_t seed)
{
    CorpusGenerator gen(seed ^ 0xa);
    Tally tally;

    const Rational third(1, 3), two_thirds(2, 3);
    for (int den = 1; den <= 12; ++den)
        for (int num = 0; num <= den; ++num)
        {
            Rational s(num, den);
            Rational want = s <= third ? Rational(0)
                            : s >= two_thirds ? Rational(1)
                                              : Rational(3 * (s - Rational(1, 2)) + Rational(1, 2));
            tally.expect(collapse_coordinate(s) == want, "r(" + format_rational(s) + ")");
        }

    for (const auto& [name, base] : test_bases())
    {
        SuspensionModel model = suspension_model(base);
        const CubicalSet& k = model.complex;
        for (const SubComplex* sub : {&model.minus, &model.plus})
            for (const Cube& c : k.cubes())
            {
                const std::string tag = name + " model, cube " + c.id;
                // Points of |L| itself.
                if (sub->count(c.id))
                    for (int rep = 0; rep < 4; ++rep)
                    {
                        std::vector<Rational> coords;
                        for (int j = 0; j < c.dim; ++j)
                            coords.push_back(gen.open_unit());
                        tally.expect(in_A(k, RealizationPoint{c.id, coords}, *sub),
                                     tag + ": point of |L| outside A");
                    }
                // Points within distance < 1/3 of a face lying in L, moving one coordinate.
                for (int i = 1; i <= c.dim; ++i)
                    for (int eps = 0; eps <= 1; ++eps)
                    {
                        if (!sub->count(c.face(i, eps).base))
                            continue;
                        for (const Rational& d : {Rational(0), Rational(1, 12), Rational(1, 4),
                                                 Rational(1, 3)})
                        {
                            std::vector<Rational> coords;
                            for (int j = 0; j < c.dim; ++j)
                                coords.push_back(gen.open_unit());
                            coords[static_cast<std::size_t>(i - 1)] = eps ? Rational(1 - d) : d;
                            RealizationPoint p = normalize_point(k, c.id, coords);
                            tally.expect(in_A(k, p, *sub), tag + ": margin point outside A");
                        }
                    }
                // The center of a cube outside L is not in A.
                if (!sub->count(c.id) && c.dim > 0)
                {
                    std::vector<Rational> center(static_cast<std::size_t>(c.dim), Rational(1, 2));
                    tally.expect(!in_A(k, RealizationPoint{c.id, center}, *sub),
                                 tag + ": center inside A");
                }
            }
    }
    return tally.finish(10, "r / R_1 collapse and the neighborhood A");
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed)
{
    using Check = CriterionResult (*)(std::uint64_t);
    const std::vector<std::pair<int, Check>> checks{
        {1, check_homology},         {2, check_suspension_iso},   {3, check_loop_homology},
        {4, check_sec_section},      {5, check_sec_homomorphism}, {6, check_make_increasing},
        {7, check_straightening},    {8, check_contraction},      {9, check_homotopy_endpoints},
        {10, check_retraction},
    };
    std::vector<CriterionResult> results;
    for (const auto& [number, check] : checks)
    {
        try
        {
            results.push_back(check(seed));
        }
        catch (const std::exception& e)
        {
            results.push_back({number, "criterion " + std::to_string(number), false,
                               std::string("exception: ") + e.what()});
        }
    }
    return results;
}

std::string format_report(const std::vector<CriterionResult>& results)
{
    std::ostringstream out;
    for (const CriterionResult& r : results)
        out << (r.passed ? "PASS" : "FAIL") << (r.number < 10 ? "  " : " ") << r.number << " "
            << r.name << ": " << r.detail << "\n";
    return out.str();
}

} // namespace jamesloop
