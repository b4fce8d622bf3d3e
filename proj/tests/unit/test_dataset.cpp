#include <doctest.h>

#include <cstdio>
#include <string>

#include "aucint/dataset.hpp"
#include "aucint/errors.hpp"
#include "aucint/mathutil.hpp"
#include "aucint/rng.hpp"
#include "test_util.hpp"

using aucint::Dataset;
using aucint::InputError;
using aucint::LoadOptions;
using aucint::LoadReport;
using aucint::load_delimited;
using testutil::write_temp_file;

namespace {

struct TempFile {
  std::string path;
  TempFile(const std::string& tag, const std::string& content)
      : path(write_temp_file(tag, content)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("loads a minimal csv") {
  TempFile f("min", "y,z\n1,2\n3,4\n");
  const Dataset d = load_delimited(f.path, "z");
  CHECK(d.n() == 2);
  CHECK(d.p() == 1);
  CHECK(d.names[0] == "y");
  CHECK(d.z_name == "z");
  CHECK(d.x(0, 0) == 1.0);
  CHECK(d.z[1] == 4.0);
}

TEST_CASE("drops rows with missing cells and counts them") {
  TempFile f("miss",
             "a,b,z\n"
             "1,2,3\n"
             "4,,6\n"      // missing b
             "7,8,9\n"
             "NA,1,2\n"    // missing a
             "2,3,nan\n"   // missing gold
             "5,6,7\n");
  LoadReport rep;
  const Dataset d = load_delimited(f.path, "z", {}, &rep);
  CHECK(d.n() == 3);
  CHECK(rep.rows_seen == 6);
  CHECK(rep.rows_dropped == 3);
  CHECK(rep.columns_skipped.empty());
}

TEST_CASE("skips non-numeric columns and reports them") {
  TempFile f("text", "id,y,z\nalpha,1,2\nbeta,3,4\ngamma,5,6\n");
  LoadReport rep;
  const Dataset d = load_delimited(f.path, "z", {}, &rep);
  CHECK(d.p() == 1);
  REQUIRE(rep.columns_skipped.size() == 1);
  CHECK(rep.columns_skipped[0] == "id");
}

TEST_CASE("gold column by index") {
  TempFile f("goldidx", "y,z\n1,2\n3,4\n");
  const Dataset d = load_delimited(f.path, "1");
  CHECK(d.z_name == "z");
  CHECK(d.z[0] == 2.0);
}

TEST_CASE("no-header files get generated names") {
  TempFile f("nohdr", "1,2\n3,4\n5,6\n");
  LoadOptions opts;
  opts.header = false;
  const Dataset d = load_delimited(f.path, "1", opts);
  CHECK(d.z_name == "v2");
  CHECK(d.names[0] == "v1");
  CHECK(d.n() == 3);
}

TEST_CASE("tab delimiter is autodetected and can be overridden") {
  TempFile f("tab", "y\tz\n1\t2\n3\t4\n");
  const Dataset d = load_delimited(f.path, "z");
  CHECK(d.n() == 2);

  TempFile g("semi", "y;z\n1;2\n3;4\n");
  LoadOptions opts;
  opts.delimiter = ';';
  const Dataset e = load_delimited(g.path, "z", opts);
  CHECK(e.n() == 2);
}

TEST_CASE("ragged rows are dropped") {
  TempFile f("ragged", "y,z\n1,2\n3\n4,5\n");
  LoadReport rep;
  const Dataset d = load_delimited(f.path, "z", {}, &rep);
  CHECK(d.n() == 2);
  CHECK(rep.rows_dropped == 1);
}

TEST_CASE("ingestion errors") {
  CHECK_THROWS_AS(load_delimited("no_such_file.csv", "z"), InputError);

  TempFile a("nogold", "y,z\n1,2\n3,4\n");
  CHECK_THROWS_AS(load_delimited(a.path, "w"), InputError);

  TempFile b("textgold", "y,z\n1,a\n3,b\n");
  CHECK_THROWS_AS(load_delimited(b.path, "z"), InputError);

  TempFile c("short", "y,z\n1,2\n");
  CHECK_THROWS_AS(load_delimited(c.path, "z"), InputError);

  TempFile d("onecol", "z\n1\n2\n");
  CHECK_THROWS_AS(load_delimited(d.path, "z"), InputError);

  TempFile e("allmiss", "y,z\nNA,2\nNA,4\n");
  CHECK_THROWS_AS(load_delimited(e.path, "z"), InputError);
}

// A registry-shaped file: several hundred rows, a couple of text columns,
// some incomplete rows that listwise deletion must drop.
TEST_CASE("complete-case filter on a larger mixed file") {
  std::string content = "id,site,y1,y2,z\n";
  aucint::StreamRng rng(5);
  int incomplete = 0;
  for (int i = 0; i < 403; ++i) {
    const bool drop = i % 18 == 7 && incomplete < 22;
    if (drop) ++incomplete;
    content += "s" + std::to_string(i) + ",clinic," +
               (drop && i % 2 == 0 ? "" : std::to_string(rng.uniform())) + "," +
               std::to_string(rng.uniform()) + "," +
               (drop && i % 2 == 1 ? "NA" : std::to_string(rng.uniform())) + "\n";
  }
  TempFile f("large", content);
  LoadReport rep;
  const Dataset d = load_delimited(f.path, "z", {}, &rep);
  CHECK(rep.rows_seen == 403);
  CHECK(rep.rows_dropped == std::size_t(incomplete));
  CHECK(d.n() == 403 - incomplete);
  CHECK(rep.columns_skipped.size() == 2);
}

TEST_CASE("standardize centers and scales every column including the gold") {
  Eigen::MatrixXd x(3, 2);
  x << 1, 10, 2, 20, 3, 30;
  const Dataset d = testutil::make_dataset(x, testutil::vec({4, 5, 9}));
  const auto [sd, info] = aucint::standardize(d);
  for (Eigen::Index j = 0; j < 2; ++j) {
    CHECK(std::abs(sd.x.col(j).mean()) < 1e-14);
    CHECK(aucint::sample_sd(sd.x.col(j)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(std::abs(sd.z.mean()) < 1e-14);
  CHECK(aucint::sample_sd(sd.z) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(info.x_mean[0] == doctest::Approx(2.0));
  CHECK(info.x_sd[0] == doctest::Approx(1.0));
  CHECK(info.z_mean == doctest::Approx(6.0));
}

TEST_CASE("standardize rejects zero-variance columns by name") {
  Eigen::MatrixXd x(3, 2);
  x << 1, 5, 2, 5, 3, 5;
  Dataset d = testutil::make_dataset(x, testutil::vec({1, 2, 3}));
  d.names = {"good", "flat"};
  try {
    aucint::standardize(d);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("flat") != std::string::npos);
  }
}

TEST_CASE("center subtracts means and is idempotent") {
  aucint::StreamRng rng(3);
  Eigen::MatrixXd x(20, 3);
  for (Eigen::Index i = 0; i < 20; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) x(i, j) = rng.normal() + 5.0;
  Eigen::VectorXd z(20);
  for (Eigen::Index i = 0; i < 20; ++i) z[i] = rng.normal() - 2.0;
  const Dataset d = testutil::make_dataset(x, z);

  const auto [h, zt] = aucint::center(d);
  for (Eigen::Index j = 0; j < 3; ++j) CHECK(std::abs(h.col(j).mean()) < 1e-13);
  CHECK(std::abs(zt.mean()) < 1e-13);
  // Scale is untouched.
  CHECK(aucint::sample_sd(h.col(0)) ==
        doctest::Approx(aucint::sample_sd(d.x.col(0))).epsilon(1e-12));

  const Dataset d2 = testutil::make_dataset(h, zt);
  const auto [h2, zt2] = aucint::center(d2);
  CHECK((h2 - h).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((zt2 - zt).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("validate rejects broken shapes") {
  Eigen::MatrixXd x(2, 1);
  x << 1, 2;
  Dataset d = testutil::make_dataset(x, testutil::vec({1, 2, 3}));
  CHECK_THROWS_AS(aucint::validate(d), std::invalid_argument);
}
