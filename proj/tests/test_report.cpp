#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ptwell/error.hpp"
#include "ptwell/report.hpp"

using namespace ptwell;
using namespace ptwell::report;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

const TableRow& row(const TableReport& t, double label) {
    for (const auto& r : t.rows) {
        if (r.epsilon == label) return r;
    }
    throw std::runtime_error("row not found");
}

}  // namespace

TEST_CASE("table rows") {
    const TableReport t1 = run_table(1);
    CHECK(t1.all_converged);
    CHECK(t1.value_column == "F");
    const TableRow& a = row(t1, 48);
    CHECK(std::abs(*a.E0 - 134.43752) <= 2e-5);
    CHECK(std::abs(*a.value - 0.06542) <= 2e-5);
    CHECK(std::abs(*a.R1 - 0.06260) <= 2e-5);
    CHECK(std::abs(*a.R2 - 0.06251) <= 2e-5);

    const TableReport t2 = run_table(2);
    CHECK(t2.M == 2);
    const TableRow& b = row(t2, 38);
    CHECK(b.model_epsilon == 36.0);
    CHECK(std::abs(*b.E0 - 37.32010) <= 2e-5);
    CHECK(std::abs(*b.value - 0.03097) <= 2e-5);
    CHECK(std::abs(*b.R1 - 0.02746) <= 2e-5);
    CHECK(std::abs(*b.R2 - 0.02766) <= 2e-5);

    const TableReport t3 = run_table(3);
    CHECK(t3.value_column == "R0");
    const TableRow& c = row(t3, 28);
    CHECK(std::abs(*c.value - 0.13767) <= 2e-5);
    CHECK(std::abs(*c.R1 - 0.14321) <= 2e-5);
    CHECK(std::abs(*c.R2 - 0.14389) <= 2e-5);
}

TEST_CASE("table CSV layout") {
    const std::string csv = table_csv(run_table(1));
    const auto ls = lines(csv);
    REQUIRE(ls.size() == 7);
    CHECK(ls[0] == "epsilon,E0,F,R1,R2");
    CHECK(ls[1] == "8,5.55331,0.07825,,");
    CHECK(ls[2].rfind("18,20.67629,0.06998,0.06336,", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');
    CHECK(lines(table_csv(run_table(3)))[0] == "epsilon,E0,R0,R1,R2");
}

TEST_CASE("failed rows leave gaps") {
    std::vector<std::optional<double>> e = {5.55331, 20.67629, std::nullopt, 84.78728, 134.43752, 196.03417};
    const TableReport t = assemble_table(1, e);
    CHECK_FALSE(t.all_converged);
    CHECK_FALSE(t.rows[2].converged);
    CHECK_FALSE(t.rows[2].message.empty());
    CHECK_FALSE(t.rows[2].value);
    CHECK_FALSE(t.rows[3].R1);  // window reaches the missing row
    CHECK(t.rows[4].R1);
    CHECK_FALSE(t.rows[4].R2);
    CHECK(t.rows[5].R2);
    CHECK(lines(table_csv(t))[3] == "28,,,,");
}

TEST_CASE("CSV round trip is identical") {
    for (int id : {1, 2, 3}) {
        const std::string csv = table_csv(run_table(id));
        CHECK(table_csv(parse_table_csv(id, csv)) == csv);
    }
}

TEST_CASE("eigen JSON schema and round trip") {
    const EigenReport rep = run_eigen({1, 1.0}, 0, 2);
    CHECK(rep.all_converged());
    const std::string js = eigen_json(rep);
    const auto j = nlohmann::json::parse(js);
    CHECK(j.at("model").at("M") == 1);
    CHECK(j.at("model").at("epsilon") == 1.0);
    REQUIRE(j.at("results").size() == 3);
    for (const auto& r : j.at("results")) {
        CHECK(r.contains("k"));
        CHECK(r.contains("E"));
        CHECK(r.contains("residual"));
        CHECK(r.at("converged") == true);
    }
    CHECK(eigen_json(parse_eigen_json(js)) == js);
    // full precision survives
    CHECK(parse_eigen_json(js).results[2].E.real() == rep.results[2].E.real());
}

TEST_CASE("eigen CSV") {
    const auto ls = lines(eigen_csv(run_eigen({1, 0.0}, 1, 1)));
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "k,E,residual,converged");
    CHECK(ls[1].rfind("1,", 0) == 0);
    const double E = std::stod(ls[1].substr(2));
    CHECK(E == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("figure curves") {
    const FigureReport f = run_figure1(10.0, 4, 0.5);
    CHECK(f.all_converged);
    REQUIRE(f.curves.size() == 5);
    for (int k = 0; k <= 4; ++k) {
        CHECK(f.monotone[k]);
        CHECK(f.curves[k].front().epsilon == 0.0);
        CHECK(f.curves[k].back().epsilon == 10.0);
        CHECK(f.curves[k].front().E == doctest::Approx(2 * k + 1).epsilon(1e-9));
        for (std::size_t i = 1; i < f.curves[k].size(); ++i) CHECK(f.curves[k][i].E >= f.curves[k][i - 1].E);
    }
    for (const auto& p : f.curves[0]) {
        if (p.epsilon == 8.0) CHECK(std::abs(p.E - 5.55331) <= 1e-5);
    }
    const auto ls = lines(figure_csv(f));
    CHECK(ls[0] == "k,epsilon,E,converged");
    CHECK(ls.size() == 1 + 5 * 21);
    CHECK(ls.back().rfind("4,10,", 0) == 0);
    CHECK(nlohmann::json::parse(figure_json(f)).at("curves").size() == 5);
    CHECK_THROWS_AS(run_figure1(11.0, 1, 0.5), DomainError);
    CHECK_THROWS_AS(run_figure1(4.0, 1, 0.0), DomainError);
}

TEST_CASE("single-result outputs") {
    CHECK(lines(limit_output(2, 1, Format::csv)).size() == 5);
    const auto lj = nlohmann::json::parse(limit_output(2, 1, Format::json));
    const double expect[] = {1.0 / 3, 2.0 / 3, 4.0 / 3, 5.0 / 3};
    for (int i = 0; i < 4; ++i) CHECK(lj.at("results")[i].at("nu").get<double>() == doctest::Approx(expect[i]));
    const auto pj = nlohmann::json::parse(period_output(0.0, 1.0, Format::json));
    CHECK(pj.at("results")[0].at("T").get<double>() == doctest::Approx(6.283185307179586));
    CHECK(lines(period_output(0.0, 1.0, Format::csv))[1].rfind("0,1,6.28318530717958", 0) == 0);
    const auto wj = nlohmann::json::parse(wkb_output({2, 1.0}, 1, Format::json));
    CHECK(wj.at("results")[0].at("E_closed").is_null());
    const std::string w2 = lines(wkb_output({1, 0.0}, 2, Format::csv))[3];
    REQUIRE(w2.rfind("2,", 0) == 0);
    std::istringstream cells(w2.substr(2));
    for (std::string cell; std::getline(cells, cell, ',');) CHECK(std::stod(cell) == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("config validation") {
    RunConfig c;
    c.command = Command::table;
    CHECK_THROWS_AS(validate(c), DomainError);
    c.table_id = 4;
    CHECK_THROWS_AS(validate(c), DomainError);
    c.table_id = 2;
    CHECK_NOTHROW(validate(c));
    c.tol = 1e-5;
    CHECK_THROWS_AS(validate(c), DomainError);
    c.tol = 1e-14;
    CHECK_THROWS_AS(validate(c), DomainError);
    RunConfig e;
    e.table_id = 1;
    CHECK_THROWS_AS(validate(e), DomainError);
    e.table_id.reset();
    e.M = 0;
    CHECK_THROWS_AS(validate(e), DomainError);
    e.M = 1;
    e.epsilon = -1;
    CHECK_THROWS_AS(validate(e), DomainError);
}

TEST_CASE("success flag tracks convergence") {
    RunConfig c;
    c.command = Command::eigen;
    c.epsilon = 0.0;
    c.k = 1;
    RunOutput out = run(c);
    CHECK(out.success);
    REQUIRE(lines(out.text).size() == 2);
    CHECK(std::stod(lines(out.text)[1].substr(2)) == doctest::Approx(3.0).epsilon(1e-10));
    c.k_max = 3;
    out = run(c);
    CHECK(out.success);
    CHECK(lines(out.text).size() == 5);
    // an unconvergeable request reports failure
    const EigenReport bad = run_eigen({1, 1.0}, 0, 0, [] {
        shooting::Options o;
        o.max_iterations = 1;
        return o;
    }());
    CHECK_FALSE(bad.all_converged());
}
