#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using nca::test::fixture;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "nca");
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = nca::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

const std::string kLex = fixture("pipeline_lexicon.tsv");

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({"frobnicate"}).status == nca::cli::kUsageError);
  CHECK(run({}).status == nca::cli::kUsageError);
  CHECK(run({"extract", "--rel-span", "x"}).status == nca::cli::kUsageError);
  CHECK(run({"extract", "--patterns", "enum,zzz"}).status ==
        nca::cli::kUsageError);
  CHECK(run({"concord", "--window", "3"}).status == nca::cli::kUsageError);
  CHECK(run({"resolve"}).status == nca::cli::kUsageError);
  ::unsetenv("NCA_LEXICON");
  CHECK(run({"segment"}, "abc\n").status == nca::cli::kUsageError);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("extract") != std::string::npos);
}

TEST_CASE("segment") {
  auto r = run({"segment", "--lexicon", kLex}, "noksoongfuungxq\n\n");
  CHECK(r.status == 0);
  CHECK(r.out == "nok soong fuung xq\n\n");
  r = run({"segment", "--lexicon", kLex, "--mark-unknown"}, "noksoongfuungxq\n");
  CHECK(r.out == "nok soong fuung xq?\n");
}

TEST_CASE("segment reads NCA_LEXICON") {
  ::setenv("NCA_LEXICON", kLex.c_str(), 1);
  auto r = run({"segment"}, "luuksom\n");
  ::unsetenv("NCA_LEXICON");
  CHECK(r.status == 0);
  CHECK(r.out == "luuk som\n");
}

TEST_CASE("tag") {
  auto r = run({"tag", "--lexicon", kLex}, "nok soong fuung xq\n");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "nok/NCMN/13111 soong/NCNM fuung/CL//2 xq/UNK\n");
  r = run({"tag", "--lexicon", kLex, "--unknown-pos", "NCMN"}, "xq\n");
  CHECK(r.out == "xq/NCMN\n");
  CHECK(run({"tag", "--lexicon", kLex, "--unknown-pos", "CL"}, "xq\n").status ==
        nca::cli::kUsageError);
}

TEST_CASE("tag rejects slashes in surfaces") {
  auto r = run({"tag", "--lexicon", kLex}, "a/b\nnok\n");
  CHECK(r.status == 0);
  CHECK(r.out == "nok/NCMN/13111\n");
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(run({"--strict", "tag", "--lexicon", kLex}, "a/b\nnok\n").status ==
        nca::cli::kDataError);
}

TEST_CASE("missing lexicon file is a data error") {
  CHECK(run({"segment", "--lexicon", "/nonexistent/lex.tsv"}, "x\n").status ==
        nca::cli::kDataError);
}

TEST_CASE("concord") {
  auto r = run({"concord", "--window", "1,1"},
               "a/NCMN b/NCMN tua/CL//1 c/DET d/NCMN\n");
  CHECK(r.status == 0);
  CHECK(r.out == "1:2\tb/NCMN [tua/CL//1] c/DET\n");
}

TEST_CASE("extract on the sample corpus") {
  auto r = run({"extract"}, nca::test::slurp(fixture("samples.tagged")));
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 9);
  CHECK(r.out.rfind("nakrian\t111\tkhon\t1\tenum\t1:2\n", 0) == 0);
}

TEST_CASE("extract options") {
  const std::string line = "nok/NCMN 3/NCNM tua/CL//1 nii/DET\n";
  CHECK(run({"extract", "--patterns", "ref"}, line).out ==
        "nok\t0\ttua\t1\tref\t1:2\n");
  CHECK(run({"extract", "--include-verbs"}, "kin/VERB 3/NCNM krang/CL//1\n")
            .out == "kin\t0\tkrang\t1\tenum\t1:2\n");
  // The lexicon fills in the missing class and classifier type.
  CHECK(run({"extract", "--lexicon", kLex, "--patterns", "enum"},
            "nok/NCMN soong/NCNM fuung/CL\n")
            .out == "nok\t13111\tfuung\t2\tenum\t1:2\n");
}

TEST_CASE("malformed input: warn by default, abort under --strict") {
  const std::string input =
      "nok/NCMN 3/NCNM tua/CL//1\n"
      "broken//\n"
      "maa/NCMN 2/NCNM tua/CL//1\n";
  auto lenient = run({"extract"}, input);
  CHECK(lenient.status == 0);
  CHECK(lenient.err.find("line 2") != std::string::npos);
  CHECK(lenient.out ==
        "nok\t0\ttua\t1\tenum\t1:2\nmaa\t0\ttua\t1\tenum\t3:2\n");

  auto strict = run({"--strict", "extract"}, input);
  CHECK(strict.status == nca::cli::kDataError);
  CHECK(strict.out == "nok\t0\ttua\t1\tenum\t1:2\n");
  CHECK(strict.err.find("error") != std::string::npos);
}

TEST_CASE("build-table, stats and resolve") {
  const std::string events =
      "nok\t13111\ttua\t1\tenum\t1:2\n"
      "nok\t13111\ttua\t1\tref\t1:2\n"
      "nok\t13111\tfuung\t2\tenum\t2:3\n"
      "bad line\n";
  auto built = run({"build-table"}, events);
  CHECK(built.status == 0);
  CHECK(built.out ==
        "nok\t13111\tfuung\t2\t1\nnok\t13111\ttua\t1\t2\n");
  CHECK(run({"--strict", "build-table"}, events).status ==
        nca::cli::kDataError);

  auto stats = run({"stats", "--labels", fixture("concept_labels.tsv")},
                   built.out);
  CHECK(stats.status == 0);
  CHECK(stats.out == "13111\tAnimal\ttua\tfuung\t2\t3\n");

  auto resolved = run({"resolve", "--table", fixture("reference_nca.tsv"),
                       "--labels", fixture("concept_labels.tsv")},
                      "appern\t13114\t1\ngangken\t13111\t2\n"
                      "khon\t111\t1\nmamuang\t13113\t2\n");
  CHECK(resolved.status == 0);
  CHECK(resolved.out ==
        "appern\tluuk\tclass\tFruit\n"
        "gangken\tfuung\tclass\tAnimal\n"
        "khon\tkhon\tdirect\tPerson\n"
        "mamuang\t-\tnone\t-\n");
}
