#include "fclda/fclda.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace fclda;

namespace {

ReflectedDataset two_point_set() {
    Dataset ds;
    ds.feature_names = {"f1", "f2"};
    ds.class_order = {"a", "b"};
    ds.samples = {{1.0, 0.0}, {-1.0, 0.0}};
    ds.labels = {"a", "b"};
    return augment_reflect(ds);
}

ReflectedDataset from_rows(std::vector<std::vector<double>> rows, std::vector<int> classes) {
    Dataset ds;
    ds.feature_names.resize(rows.front().size());
    for (std::size_t j = 0; j < ds.feature_names.size(); ++j)
        ds.feature_names[j] = "f" + std::to_string(j + 1);
    ds.class_order = {"a", "b"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ds.samples.push_back(rows[i]);
        ds.labels.push_back(classes[i] == 1 ? "a" : "b");
    }
    return augment_reflect(ds);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

}  // namespace

TEST_CASE("objective_modified sums all reflected samples") {
    ReflectedDataset rd = from_rows({{2.0, 3.0}, {4.0, 1.0}}, {1, 2});
    // reflected rows: (1,2,3) and (-1,-4,-1)
    CHECK(objective_modified(rd) == std::vector<double>{0.0, -2.0, 2.0});

    ReflectedDataset one = from_rows({{5.0, 5.0}, {-9.0, 0.0}}, {1, 2});
    // single class-1 sample (1,5,5); class-2 sample (-1,9,0) keeps it binary
    auto c = objective_modified(one);
    CHECK(c == std::vector<double>{0.0, 14.0, 5.0});

    // mirrored data cancels
    ReflectedDataset sym = from_rows({{2.0, 1.0}, {2.0, 1.0}}, {1, 2});
    CHECK(objective_modified(sym) == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("objective_perceptron selects by margin sign") {
    ReflectedDataset rd = from_rows({{2.0, 3.0}, {-1.0, 4.0}}, {1, 1});
    const std::vector<double> v{0.0, 1.0, 0.0};
    // margins: 2 and -1; only the second is selected
    CHECK(objective_perceptron(rd, v) == std::vector<double>{1.0, -1.0, 4.0});

    CHECK(objective_perceptron(rd, {10.0, 1.0, 0.0}) ==
          std::vector<double>{0.0, 0.0, 0.0});  // all margins positive

    // all margins negative selects everything = modified objective
    const std::vector<double> flipped{-10.0, -1.0, 0.0};
    CHECK(objective_perceptron(rd, flipped) == objective_modified(rd));

    CHECK_THROWS_AS(objective_perceptron(rd, {0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("tolerance computation") {
    ReflectedDataset rd = from_rows({{3.0, 4.0}, {0.3, -0.4}}, {1, 2});
    // reflected norms: |(1,3,4)| = sqrt(26), |(-1,-0.3,0.4)| = sqrt(1.25)
    auto per = compute_tolerances(rd, {0.2, ToleranceMode::PerSample});
    CHECK(per[0] == doctest::Approx(0.2 * std::sqrt(26.0)).epsilon(1e-12));
    CHECK(per[0] == doctest::Approx(1.019803902718557).epsilon(1e-9));
    CHECK(per[1] == doctest::Approx(0.2 * std::sqrt(1.25)).epsilon(1e-12));

    auto zero = compute_tolerances(rd, {0.0, ToleranceMode::PerSample});
    CHECK(zero == std::vector<double>{0.0, 0.0});
    auto zero_g = compute_tolerances(rd, {0.0, ToleranceMode::GlobalMax});
    CHECK(zero_g == std::vector<double>{0.0, 0.0});

    auto global = compute_tolerances(rd, {0.1, ToleranceMode::GlobalMax});
    CHECK(global[0] == doctest::Approx(0.1 * std::sqrt(26.0)));
    CHECK(global[1] == doctest::Approx(0.1 * std::sqrt(26.0)));

    CHECK_THROWS_AS(compute_tolerances(rd, {1.5, ToleranceMode::PerSample}),
                    std::invalid_argument);
}

TEST_CASE("separable pair trains cleanly under both criteria") {
    ReflectedDataset rd = two_point_set();
    for (Criterion crit : {Criterion::Modified, Criterion::Perceptron}) {
        DiscriminantModel m = fit(rd, crit, {0.2, ToleranceMode::PerSample});
        CHECK(norm2(m.v) == doctest::Approx(1.0).epsilon(1e-12));
        // both samples classified correctly
        CHECK(predict(m, {1.0, 0.0}).class_index == 1);
        CHECK(predict(m, {-1.0, 0.0}).class_index == 2);
        if (crit == Criterion::Perceptron) {
            CHECK(m.alpha == 1.0);
            CHECK(m.converged);
        }
        CHECK(alpha_certificate(m, rd) >= m.alpha - 1e-6);
    }
}

TEST_CASE("predict semantics and tie handling") {
    DiscriminantModel m;
    m.v = {0.0, 1.0, 0.0};
    m.v_raw = m.v;
    auto a = predict(m, {3.0, -7.0});
    CHECK(a.class_index == 1);
    CHECK(a.decision_value == doctest::Approx(3.0));
    CHECK_FALSE(a.tie);

    auto b = predict(m, {-3.0, 7.0});
    CHECK(b.class_index == 2);
    CHECK(b.decision_value == doctest::Approx(-3.0));

    auto c = predict(m, {0.0, 9.0});
    CHECK(c.class_index == 1);
    CHECK(c.tie);
    CHECK(c.decision_value == 0.0);

    CHECK_THROWS_AS(predict(m, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("training is sign-coherent on its own samples") {
    Dataset ds = synthetic_two_gaussians(30, {1.5, -0.5}, {-1.0, 0.5}, 0.8, 11);
    ReflectedDataset rd = augment_reflect(ds);
    DiscriminantModel m = fit(rd, Criterion::Modified, {0.1, ToleranceMode::PerSample});
    for (std::size_t i = 0; i < rd.size(); ++i) {
        const auto pred = predict(m, ds.samples[i]);
        const bool correct = pred.class_index == rd.class_of[i] && !pred.tie;
        double margin = 0.0;
        for (std::size_t j = 0; j < m.v.size(); ++j) margin += m.v[j] * rd.reflected[i][j];
        CHECK(correct == (margin > 0));
    }
}

TEST_CASE("scaling v leaves every prediction unchanged") {
    Dataset ds = synthetic_two_gaussians(20, {1.0, 0.0}, {-1.0, 0.5}, 0.9, 3);
    ReflectedDataset rd = augment_reflect(ds);
    DiscriminantModel m = fit(rd, Criterion::Modified, {0.2, ToleranceMode::PerSample});
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> lambda(0.01, 50.0);
    for (int rep = 0; rep < 10; ++rep) {
        DiscriminantModel scaled = m;
        const double f = lambda(rng);
        for (double& x : scaled.v) x *= f;
        for (const auto& s : ds.samples)
            CHECK(predict(scaled, s).class_index == predict(m, s).class_index);
    }
}

TEST_CASE("alpha certificate holds for trained models") {
    Dataset ds = synthetic_two_gaussians(25, {1.0, 0.2}, {-0.6, -0.4}, 1.0, 23);
    ReflectedDataset rd = augment_reflect(ds);
    for (Criterion crit : {Criterion::Modified, Criterion::Perceptron}) {
        for (double theta : {0.1, 0.3}) {
            DiscriminantModel m = fit(rd, crit, {theta, ToleranceMode::PerSample});
            CHECK(std::abs(alpha_certificate(m, rd) - m.alpha) <= 1e-6);
            CHECK(m.alpha >= 0.0);
            CHECK(m.alpha <= 1.0);
        }
    }
}

TEST_CASE("crisp limit: theta 0 reproduces the tight program with alpha 1") {
    Dataset ds = synthetic_two_gaussians(15, {2.0, 0.0}, {-2.0, 0.0}, 0.6, 5);
    ReflectedDataset rd = augment_reflect(ds);
    DiscriminantModel m = fit(rd, Criterion::Modified, {0.0, ToleranceMode::PerSample});
    CHECK(m.alpha == 1.0);
    CHECK(m.z_lower == doctest::Approx(m.z_upper));

    const auto c = objective_modified(rd);
    LinearProgram crisp;
    crisp.objective = c;
    for (const auto& y : rd.reflected) {
        std::vector<double> row(y.size());
        for (std::size_t j = 0; j < y.size(); ++j) row[j] = -y[j];
        crisp.rows.push_back(row);
    }
    crisp.rhs.assign(rd.size(), 0.0);
    crisp.lower.assign(rd.dim(), -1.0);
    crisp.upper.assign(rd.dim(), 1.0);
    auto s = solve(crisp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(dot(c, m.v_raw) ==
          doctest::Approx(s.objective_value).epsilon(1e-9));
}

TEST_CASE("perceptron empties its misclassified set on separable data") {
    Dataset ds = synthetic_two_gaussians(50, {2.0, 0.0}, {-2.0, 0.0}, 0.5, 42);
    ReflectedDataset rd = augment_reflect(ds);
    DiscriminantModel m = fit(rd, Criterion::Perceptron, {0.2, ToleranceMode::PerSample});
    CHECK(m.alpha == 1.0);
    CHECK(m.converged);
    CHECK(m.iterations <= 50);
    for (std::size_t i = 0; i < rd.size(); ++i) {
        double margin = 0.0;
        for (std::size_t j = 0; j < m.v.size(); ++j) margin += m.v[j] * rd.reflected[i][j];
        CHECK(margin > 0.0);
    }
}

TEST_CASE("perfectly symmetric data is flagged, not crashed") {
    // the same point in both classes makes the modified objective vanish
    ReflectedDataset rd = from_rows({{1.0, 1.0}, {1.0, 1.0}}, {1, 2});
    DiscriminantModel m = fit(rd, Criterion::Modified, {0.2, ToleranceMode::PerSample});
    CHECK(m.degenerate_objective);
    CHECK(m.alpha == 1.0);
}

TEST_CASE("fit input contracts") {
    ReflectedDataset empty;
    CHECK_THROWS_AS(fit(empty, Criterion::Modified, {}), std::invalid_argument);

    Dataset ds;
    ds.feature_names = {"f1"};
    ds.class_order = {"a", "b"};
    ds.samples = {{1.0}, {2.0}};
    ds.labels = {"a", "a"};
    ReflectedDataset one_sided = augment_reflect(ds);
    CHECK_THROWS_AS(fit(one_sided, Criterion::Modified, {}), std::invalid_argument);
}
