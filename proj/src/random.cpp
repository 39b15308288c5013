#include "l2a/random.hpp"

namespace l2a {

namespace {

ExpPoly draw(int m, Rng& rng, int max_terms, bool allow_exp) {
    int n = rng.uniform(1, max_terms);
    std::vector<RawTerm> raw;
    RVec form = zeros(m);
    if (allow_exp && rng.chance(1, 3)) {
        for (int i = 0; i < m; ++i) form[i] = rng.uniform(-2, 2);
    }
    for (int t = 0; t < n; ++t) {
        int c = rng.uniform(-2, 2);
        if (c == 0) c = 1;
        std::vector<unsigned> mono(m, 0);
        int deg = rng.uniform(0, 2);
        for (int k = 0; k < deg; ++k) ++mono[rng.uniform(0, m - 1)];
        raw.push_back(RawTerm{Rational(c), mono, form});
    }
    return ExpPoly::normalize(m, raw);
}

template <class G>
G draw_graded(int m, int degree, Rng& rng, bool polynomial) {
    G g(m, degree);
    if (degree > m) return g;
    // every increasing tuple gets a coefficient with probability 1/2
    std::vector<int> idx(degree);
    for (int i = 0; i < degree; ++i) idx[i] = i;
    while (true) {
        if (rng.chance(1, 2)) g.add(idx, draw(m, rng, 2, !polynomial));
        int pos = degree - 1;
        while (pos >= 0 && idx[pos] == m - degree + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < degree; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g;
}

}  // namespace

ExpPoly random_exppoly(int m, Rng& rng, int max_terms) { return draw(m, rng, max_terms, true); }

ExpPoly random_polynomial(int m, Rng& rng, int max_terms) { return draw(m, rng, max_terms, false); }

MultiVector random_multivector(int m, int degree, Rng& rng, bool polynomial) {
    return draw_graded<MultiVector>(m, degree, rng, polynomial);
}

Form random_form(int m, int degree, Rng& rng, bool polynomial) {
    return draw_graded<Form>(m, degree, rng, polynomial);
}

}  // namespace l2a
