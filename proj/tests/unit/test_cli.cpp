#include "doctest.h"
#include "cli.hpp"
#include "mpa/serialize.hpp"

#include <fstream>
#include <sstream>

using namespace mpa;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
    const auto r = call(std::move(args));
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return Json::parse(r.out);
}

const std::string kG1 = R"({"lambda":[2],"edges":[[[0],[1]],[[1],[0]],[[1],[1]]]})";

std::string golden(const std::string& name) {
    std::ifstream in(std::string(MPA_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
    std::stringstream s;
    s << in.rdbuf();
    std::string text = s.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
}

void check_golden(const std::string& name, std::vector<std::string> args) {
    const auto r = call(std::move(args));
    REQUIRE_MESSAGE(r.code == 0, r.err);
    CHECK(Json::parse(r.out) == Json::parse(golden(name)));
}

}  // namespace

TEST_CASE("cli mul reproduces the k=2 product and roundtrips") {
    const Json j = call_json({"mul", "--lambda", "2", "--a", kG1, "--b", kG1});
    const auto p = mp_element_from_json(j);
    CHECK(to_json(p) == j);
    CHECK(p.terms().size() == 3);
    CHECK(p.coefficient(multiset_diagram_from_json(Json::parse(kG1))) == Poly::xi_plus(-2));
    const Json at4 = call_json({"mul", "--a", kG1, "--b", kG1, "--n", "4"});
    CHECK(mp_element_from_json(at4).coefficient(multiset_diagram_from_json(Json::parse(kG1))) == Poly(2));
}

TEST_CASE("cli partition algebra product") {
    const std::string d2 = R"({"k":5,"basis":"diagram","terms":[{"blocks":[[1,2,-1],[3,5],[-2,-3],[-4],[4,-5]],"coeff":["1"]}]})";
    const std::string d1 = R"({"k":5,"basis":"diagram","terms":[{"blocks":[[1,-1],[2],[3],[4],[-2,-3],[5,-4,-5]],"coeff":["1"]}]})";
    const Json j = call_json({"mul", "--a", d1, "--b", d2});
    const auto p = pa_element_from_json(j);
    CHECK(to_json(p) == j);
    CHECK(p.coefficient(SetPartitionDiagram::from_blocks(5, {{1, 2, -1}, {3, 5}, {4, -4, -5}, {-2, -3}})) == Poly::xi_power(2));
}

TEST_CASE("cli outputs reparse") {
    const Json basis = call_json({"basis", "--lambda", "2"});
    CHECK(basis["count"] == "9");
    for (const auto& g : basis["basis"]) CHECK(to_json(multiset_diagram_from_json(g)) == g);

    const Json e = call_json({"idempotent", "--lambda", "2"});
    CHECK(to_json(pa_element_from_json(e)) == e);
    const Json emb = call_json({"embed", "--a", kG1});
    CHECK(to_json(pa_element_from_json(emb)) == emb);

    const Json m = call_json({"phi", "--a", kG1, "--n", "3"});
    CHECK(to_json(operator_matrix_from_json(m)) == m);

    const Json sp = call_json({"structure-poly", "--g1", kG1, "--g2", kG1, "--g", kG1, "--n", "5"});
    CHECK(poly_from_json(sp["coeff"], "coeff") == Poly::xi_plus(-2));
    CHECK(sp["value"] == "3");
    CHECK(sp["brute_force"] == "3");

    const std::string d = R"({"lambda":[2,2,1],"edges":[[[1,1,0],[0,0,0]],[[0,0,0],[1,1,0]],[[1,0,1],[1,0,0]],[[0,1,0],[0,1,0]],[[0,0,0],[0,0,1]]]})";
    const Json pair = call_json({"rsk", "--lambda", "2,2,1", "--n", "6", "--partition", d});
    CHECK(to_json(rsk_pair_from_json(pair)) == pair);
    const Json back = call_json({"rsk", "--invert", "--lambda", "2,2,1", "--pair", pair.dump()});
    CHECK(multiset_diagram_from_json(back) == multiset_diagram_from_json(Json::parse(d)));
}

TEST_CASE("cli tables") {
    const Json r = call_json({"r-coeff", "--lambda", "1,1", "--n", "5"});
    for (const auto& row : r["rows"]) {
        const auto nu = partition_from_json(row["nu"], "nu");
        if (nu == IntegerPartition({5})) CHECK(row["r"] == "0");
        if (nu == IntegerPartition({4, 1})) CHECK(row["r"] == "1");
    }
    const Json a = call_json({"a-coeff", "--lambda", "2", "--n", "5"});
    CHECK(a["dimension"] == "15");
    CHECK(a["dimension"] == a["expected_dimension"]);
    const auto csv = call({"a-coeff", "--lambda", "2", "--n", "4", "--as-table", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("nu,(2),\"(1,1)\"\n(4),2,2\n", 0) == 0);
    const Json dual = call_json({"duality-check", "--lambda", "2", "--n", "3"});
    CHECK(dual["holds"] == true);
    CHECK(dual["kernel_dimension"] == "1");
    CHECK(call_json({"centralizer-dim", "--lambda", "2", "--n", "4"})["dimension"] == "9");
    CHECK(call_json({"lambda-set", "--k", "2", "--n", "5"})["partitions"].size() == 3);
}

TEST_CASE("cli golden files") {
    check_golden("mul_k2.json", {"mul", "--lambda", "2", "--a", kG1, "--b", kG1});
    check_golden("basis_1_1.json", {"basis", "--lambda", "1,1"});
    check_golden("r_coeff_1_1_n5.json", {"r-coeff", "--lambda", "1,1", "--n", "5"});
    check_golden("a_coeff_2_n5.json", {"a-coeff", "--lambda", "2", "--n", "5"});
    check_golden("idempotent_2.json", {"idempotent", "--lambda", "2"});
    check_golden("phi_2_n3.json", {"phi", "--a", kG1, "--n", "3"});
}

TEST_CASE("cli exit codes and diagnostics") {
    auto bad = call({"mul", "--a", R"({"lambda":[2],"edges":[[[0],[1]],[[3],[0]]]})", "--b", kG1});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("a.edges") != std::string::npos);
    bad = call({"mul", "--a", R"({"lambda":[2],"terms":[{"edges":[[[0],[2]],[[2],[0]]],"coeff":["x"]}]})", "--b", kG1});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("a.terms[0].coeff[0]") != std::string::npos);
    bad = call({"mul", "--a", "{not json", "--b", kG1});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("a") != std::string::npos);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"basis", "--lambda", "2,x"}).code == 2);
    CHECK(call({"basis", "--lambda", "2", "--format", "yaml"}).code == 2);
    CHECK(call({"idempotent", "--lambda", "2", "--format", "csv"}).code == 2);
    CHECK(call({"verify", "--suite", "nope"}).code == 2);
    CHECK(call({"phi", "--a", kG1, "--n", "3", "--max-dim", "2"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli verify is deterministic") {
    const std::vector<std::string> args{"verify", "--suite", "1,2,8", "--max-size", "smoke", "--seed", "7"};
    const auto a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["passed"] == true);
}
