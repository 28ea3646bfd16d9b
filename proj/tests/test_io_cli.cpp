#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "plhyp/fixtures.hpp"
#include "plhyp/hypersimplex.hpp"
#include "plhyp/io.hpp"

using namespace plhyp;

namespace {

const std::string kFixtures = PLHYP_FIXTURES_DIR;
const std::string kCli = PLHYP_CLI;

int run_cli(const std::string& args, std::string* output = nullptr) {
    std::string out_path = "/tmp/plhyp_cli_out.json";
    std::string cmd = kCli + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out_path);
        std::stringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("complexes round-trip through the JSON schema") {
    for (ComplexPtr c :
         {delta_complex(1), boundary_delta(2), boundary_delta(3), torus7(), rp2_6()}) {
        json j = complex_to_json(*c);
        Complex back = complex_from_json(j);
        CHECK(back.same_as(*c));
        // canonical form is a fixed point
        CHECK(canonical_dump(complex_to_json(back)) == canonical_dump(j));
    }
}

TEST_CASE("numeric ids stay numeric, strings stay strings") {
    json j = complex_to_json(*torus7());
    for (const json& v : j.at("vertices")) CHECK(v.is_number_integer());
    json z = hypersimplex_to_json(zigzag_fixture());
    for (const json& v : z.at("X").at("vertices")) CHECK(v.is_string());
    Complex back = complex_from_json(j);
    CHECK(back.same_as(*torus7()));
}

TEST_CASE("maps and hypersimplices round-trip") {
    HyperbolizedSimplex z = zigzag_fixture();
    json j = hypersimplex_to_json(z);
    HyperbolizedSimplex back = hypersimplex_from_json(j);
    CHECK(back.n == z.n);
    CHECK(back.x->same_as(*z.x));
    CHECK(back.t.complex->same_as(*z.t.complex));
    CHECK(canonical_dump(hypersimplex_to_json(back)) == canonical_dump(j));

    SimplicialMap m = z.f;
    SimplicialMap mback = map_from_json(map_to_json(m));
    CHECK(mback.source()->same_as(*m.source()));
    CHECK(mback.nondegenerate() == m.nondegenerate());
}

TEST_CASE("committed fixtures match the builders bit-exactly") {
    auto check_file = [](const std::string& name, const json& expected) {
        json loaded = load_json_file(kFixtures + "/" + name);
        CAPTURE(name);
        CHECK(loaded == expected);
    };
    check_file("k_delta1.json", complex_to_json(*delta_complex(1)));
    check_file("k_boundary_delta2.json", complex_to_json(*boundary_delta(2)));
    check_file("k_boundary_delta3.json", complex_to_json(*boundary_delta(3)));
    check_file("k_torus7.json", complex_to_json(*torus7()));
    check_file("k_rp2_6.json", complex_to_json(*rp2_6()));
    for (int n = 0; n <= 3; ++n) {
        check_file("hx_id_" + std::to_string(n) + ".json",
                   hypersimplex_to_json(identity_hypersimplex(n)));
    }
    check_file("hx_zigzag.json", hypersimplex_to_json(zigzag_fixture()));
    check_file("hx_doubled_triangle.json", hypersimplex_to_json(doubled_triangle_fixture()));
}

TEST_CASE("subcomplex loading validates against the ambient complex") {
    ComplexPtr k = boundary_delta(3);
    json l = load_json_file(kFixtures + "/l_cycle3.json");
    Subcomplex sub = subcomplex_from_json(k, l);
    CHECK(sub.size() == 6);
    json bad = json{{"vertices", {9}}, {"simplices", {{9}}}};
    CHECK_THROWS_AS((void)subcomplex_from_json(k, bad), std::invalid_argument);
}

TEST_CASE("input hashing is deterministic") {
    json j = complex_to_json(*torus7());
    CHECK(fnv1a_hex(canonical_dump(j)) == fnv1a_hex(canonical_dump(j)));
    json other = complex_to_json(*rp2_6());
    CHECK(fnv1a_hex(canonical_dump(j)) != fnv1a_hex(canonical_dump(other)));
}

TEST_CASE("OFF export") {
    std::string off = export_off(*delta_complex(2));
    std::istringstream in(off);
    std::string magic;
    int nv = 0, nf = 0, ne = 0;
    in >> magic >> nv >> nf >> ne;
    CHECK(magic == "OFF");
    CHECK(nv == 3);
    CHECK(nf == 1);
    CHECK(ne == 3);
    CHECK_THROWS_AS((void)export_off(*delta_complex(4)), std::invalid_argument);
    // a 1-complex exports its edges as presentation-only 2-gons
    std::string circle_off = export_off(*boundary_delta(2));
    std::istringstream in2(circle_off);
    in2 >> magic >> nv >> nf >> ne;
    CHECK(nv == 3);
    CHECK(nf == 3);
}

TEST_CASE("cli: validate-hs exit codes") {
    CHECK(run_cli("validate-hs " + kFixtures + "/hx_id_2.json") == 0);
    CHECK(run_cli("validate-hs " + kFixtures + "/hx_toy2.json") == 0);
    std::string out;
    CHECK(run_cli("validate-hs " + kFixtures + "/hx_zigzag.json", &out) == 1);
    json report = json::parse(out);
    CHECK(report.at("report").at("proper") == "fail");
    CHECK(report.at("report").at("c2") == "pass");
    save_text_file("/tmp/plhyp_garbage.json", "{ not json");
    CHECK(run_cli("validate-hs /tmp/plhyp_garbage.json") == 2);
    CHECK(run_cli("validate-hs /tmp/plhyp_missing_file.json") == 2);
}

TEST_CASE("cli: hyperbolize") {
    std::string k = kFixtures + "/k_boundary_delta2.json";
    std::string out_file = "/tmp/plhyp_hex.json";
    CHECK(run_cli("hyperbolize " + k + " " + kFixtures + "/hx_id_1.json " + out_file) == 0);
    json result = load_json_file(out_file);
    Complex bk = complex_from_json(result.at("bK"));
    CHECK(is_circle(bk));
    CHECK(bk.vertex_count() == 6);  // the hexagon

    // refused without force, accepted with it
    CHECK(run_cli("hyperbolize " + k + " " + kFixtures + "/hx_zigzag.json " + out_file) == 1);
    CHECK(run_cli("hyperbolize " + k + " " + kFixtures + "/hx_zigzag.json " + out_file +
                  " --force") == 0);
    // dimension mismatch is a precondition error
    CHECK(run_cli("hyperbolize " + k + " " + kFixtures + "/hx_id_2.json " + out_file) == 3);
}

TEST_CASE("cli: homology of the torus") {
    std::string out;
    CHECK(run_cli("homology " + kFixtures + "/k_torus7.json", &out) == 0);
    json r = json::parse(out).at("report");
    CHECK(r.at("0").at("betti") == 1);
    CHECK(r.at("1").at("betti") == 2);
    CHECK(r.at("2").at("betti") == 1);
    CHECK(run_cli("homology " + kFixtures + "/k_rp2_6.json --coeff Z2", &out) == 0);
    json r2 = json::parse(out).at("report");
    CHECK(r2.at("1").at("betti") == 1);
}

TEST_CASE("cli: regneigh and verify-pullback") {
    std::string k = kFixtures + "/k_boundary_delta3.json";
    std::string out;
    CHECK(run_cli("regneigh " + k + " " + kFixtures + "/l_vertex.json", &out) == 0);
    json r = json::parse(out).at("report");
    CHECK(r.at("collapses_to_core") == true);
    CHECK(r.at("frontier").at("components") == 1);

    CHECK(run_cli("verify-pullback " + k + " " + kFixtures + "/l_edge.json " + kFixtures +
                  "/hx_id_2.json", &out) == 0);
    CHECK(json::parse(out).at("report").at("ok") == true);

    // forced zigzag over the circle fails and names the failing stage
    CHECK(run_cli("verify-pullback " + kFixtures + "/k_boundary_delta2.json " + kFixtures +
                  "/l_vertex.json " + kFixtures + "/hx_zigzag.json --force", &out) == 1);
    CHECK(json::parse(out).at("report").at("failed_at") == "bK is a manifold");
}

TEST_CASE("cli: verify-properties") {
    std::string out;
    CHECK(run_cli("verify-properties " + kFixtures + "/k_boundary_delta2.json " + kFixtures +
                  "/hx_id_1.json", &out) == 0);
    json r = json::parse(out).at("report");
    CHECK(r.at("pi0_bijective") == true);
    CHECK(r.at("one_skeleton_isomorphism") == true);
    CHECK(r.at("homology_surjective").at("Z") == true);
    CHECK(r.at("links").at("all_match") == true);

    // the fold disk has covering edge preimages: the one-skeleton check is
    // inapplicable and the bundle still passes
    CHECK(run_cli("verify-properties " + kFixtures + "/k_boundary_delta3.json " + kFixtures +
                  "/hx_toy2.json", &out) == 0);
    json r2 = json::parse(out).at("report");
    CHECK(r2.at("one_skeleton_isomorphism") == false);
    CHECK(r2.at("one_skeleton_applicable") == false);
    CHECK(r2.at("all") == true);
}

TEST_CASE("cli: search-toy reproduces the committed fixture") {
    std::string out;
    std::string found = "/tmp/plhyp_toy.json";
    CHECK(run_cli("search-toy --max-vertices 11 --out " + found, &out) == 0);
    json r = json::parse(out).at("report");
    CHECK(r.at("found") == true);
    CHECK(load_json_file(found) == load_json_file(kFixtures + "/hx_toy2.json"));
    CHECK(run_cli("search-toy --max-vertices 6") == 1);  // nothing that small
}

TEST_CASE("cli: export-off") {
    std::string out;
    CHECK(run_cli("export-off " + kFixtures + "/k_boundary_delta3.json", &out) == 0);
    CHECK(out.substr(0, 3) == "OFF");
}
