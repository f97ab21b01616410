#include <doctest.h>

#include <unistd.h>

#include "fsel/config.hpp"
#include "fsel/error.hpp"
#include "fsel/manifest.hpp"
#include "fsel/report.hpp"
#include "fsel/sha256.hpp"
#include "test_util.hpp"

using namespace fsel;

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // streaming over a file agrees with the in-memory digest
    testutil::TempDir tmp;
    const std::string blob(100000, 'x');
    testutil::write_file(tmp.file("blob"), blob);
    CHECK(sha256_file_hex(tmp.file("blob")) == sha256_hex(blob));
}

TEST_CASE("config parse -> serialize -> parse is the identity") {
    const std::string text =
        "pipeline = select\n"
        "dataset = data/wine.csv\n"
        "label = class\n"
        "missing = median-mode\n"
        "classifier = knn\n"
        "folds = 5\n"
        "repeats = 33\n"
        "seed = 987654321\n"
        "threads = 2\n"
        "lifting_mode = revert\n"
        "out = runs/x\n"
        "format = jsonl\n"
        "\n"
        "[knn]\n"
        "k = 4\n"
        "metric = euclidean\n"
        "weighting = uniform\n";
    const ExperimentConfig a = parse_config(text);
    const std::string canon = serialize_config(a);
    const ExperimentConfig b = parse_config(canon);
    CHECK(serialize_config(b) == canon);
    CHECK(b.pipeline == Pipeline::select);
    CHECK(b.repeats == 33);
    CHECK(b.seed == 987654321);
    CHECK(b.lifting_mode == LiftingMode::revert);
    CHECK(b.format == ReportFormat::jsonl);
    REQUIRE(b.classifier.is_knn());
    CHECK(b.classifier.knn().k == 4);
    CHECK(b.classifier.knn().metric == KnnMetric::euclidean);
    CHECK(b.classifier.knn().weighting == KnnWeighting::uniform);
}

TEST_CASE("config errors name the offending field") {
    auto message_of = [](const std::string& text) {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("pipeline = dance\n").find("pipeline") != std::string::npos);
    CHECK(message_of("repeats = many\n").find("repeats") != std::string::npos);
    CHECK(message_of("bogus = 1\n").find("bogus") != std::string::npos);
    CHECK(message_of("[what]\n").find("what") != std::string::npos);

    ExperimentConfig cfg;
    cfg.dataset_path = "/definitely/not/here.csv";
    try {
        validate_config(cfg);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("dataset") != std::string::npos);
    }
}

TEST_CASE("accuracy formatting uses four decimals") {
    CHECK(fmt_accuracy(84.6191) == "84.6191");
    CHECK(fmt_accuracy(100.0) == "100.0000");
    CHECK(fmt_accuracy(-0.2047) == "-0.2047");
    CHECK(fmt_accuracy(42.62384) == "42.6238");
}

TEST_CASE("report writer renders csv, md and jsonl") {
    Table t;
    t.columns = {"size", "accuracy", "combination"};
    t.rows = {{"1", "62.4747", "c"}, {"2", "77.7398", "ac"}};

    testutil::TempDir tmp;
    SUBCASE("csv") {
        ReportWriter w(tmp.path(), ReportFormat::csv);
        w.write_table("sfs", t);
        CHECK(testutil::read_file(tmp.file("sfs.csv")) ==
              "size,accuracy,combination\n1,62.4747,c\n2,77.7398,ac\n");
    }
    SUBCASE("md") {
        ReportWriter w(tmp.path(), ReportFormat::md);
        w.write_table("sfs", t);
        const std::string md = testutil::read_file(tmp.file("sfs.md"));
        CHECK(md.find("| size | accuracy | combination |") != std::string::npos);
        CHECK(md.find("| 2 | 77.7398 | ac |") != std::string::npos);
    }
    SUBCASE("jsonl emits one object per row with numeric cells as numbers") {
        ReportWriter w(tmp.path(), ReportFormat::jsonl);
        w.write_table("sfs", t);
        const std::string jsonl = testutil::read_file(tmp.file("sfs.jsonl"));
        CHECK(jsonl.find("{\"size\":1,\"accuracy\":62.4747,\"combination\":\"c\"}") !=
              std::string::npos);
    }
}

TEST_CASE("combination strings use pool-position letters in sorted order") {
    const std::vector<int> pool = {7, 3, 9, 1, 5};
    CHECK(pool_alias(0) == "a");
    CHECK(pool_alias(25) == "z");
    CHECK(pool_alias(26) == "f26");
    CHECK(combination_string({9, 7}, pool) == "ac");
    CHECK(combination_string({1, 3, 5}, pool) == "bde");
    CHECK(combination_string({7, 3, 9, 1, 5}, pool) == "abcde");
}

TEST_CASE("manifest round-trips through json") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.file("a.csv"), "x,y\n1,2\n");
    RunManifest m;
    m.version = "0.1.0";
    m.status = "ok";
    m.seed = 42;
    m.duration_ms = 17;
    m.config_text = "pipeline = evaluate\n";
    m.files = digest_files(tmp.path(), {"a.csv"});
    write_manifest(m, tmp.file("manifest.json"));

    const RunManifest back = read_manifest(tmp.file("manifest.json"));
    CHECK(back.version == m.version);
    CHECK(back.status == "ok");
    CHECK(back.seed == 42);
    CHECK(back.config_text == m.config_text);
    REQUIRE(back.files.size() == 1);
    CHECK(back.files[0].path == "a.csv");
    CHECK(back.files[0].sha256 == sha256_hex("x,y\n1,2\n"));
    CHECK(back.files[0].bytes == 8);
}
