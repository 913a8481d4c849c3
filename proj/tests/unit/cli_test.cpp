#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"

#include "foldenum/oracle.hpp"

namespace foldenum::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("foldenum-test-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(CliSizesTest, PrintsAscendingSizes)
{
    EXPECT_EQ(invoke({"sizes", "--n", "301", "--k", "3"}).out, "100,100,101\n");
    EXPECT_EQ(invoke({"sizes", "--n", "90", "--k", "5"}).out, "18,18,18,18,18\n");
}

TEST(CliSizesTest, EmptyFoldIsValidationError)
{
    const auto r = invoke({"sizes", "--n", "5", "--k", "6"});
    EXPECT_EQ(r.code, kValidationError);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("fold count exceeds records"), std::string::npos);
}

TEST(CliParseTest, BadArgumentsExitTwo)
{
    EXPECT_EQ(invoke({}).code, kValidationError);
    EXPECT_EQ(invoke({"sizes", "--n", "abc", "--k", "2"}).code, kValidationError);
    EXPECT_EQ(invoke({"count", "--k", "2"}).code, kValidationError);
    EXPECT_EQ(invoke({"count", "--classes", "1,x", "--k", "2"}).code, kValidationError);
    EXPECT_EQ(invoke({"count", "--classes", "1,,2", "--k", "2"}).code, kValidationError);
    EXPECT_EQ(invoke({"enumerate", "--classes", "1,1", "--k", "2", "--format", "xml"}).code, kValidationError);
    EXPECT_EQ(invoke({"count", "--classes", "2,2", "--labels-file", "x", "--k", "2"}).code, kValidationError);
    EXPECT_EQ(invoke({"frobnicate"}).code, kValidationError);
}

TEST(CliParseTest, HelpExitsZero)
{
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

TEST(CliEnumerateTest, JsonlRecordShape)
{
    const auto r = invoke({"enumerate", "--classes", "1,1", "--k", "2", "--format", "jsonl"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "{\"folds\":[[0,1],[1,0]]}\n");
    EXPECT_EQ(r.err, "1 configurations\n");
}

TEST(CliEnumerateTest, JsonlIsTheDefaultAndParses)
{
    const auto r = invoke({"enumerate", "--classes", "3,4,5", "--k", "3"});
    ASSERT_EQ(r.code, kOk);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 19u);
    for (const auto& line : lines) {
        const auto doc = nlohmann::json::parse(line);
        ASSERT_EQ(doc.size(), 1u);
        ASSERT_EQ(doc.at("folds").size(), 3u);
        for (const auto& row : doc.at("folds"))
            ASSERT_EQ(row.get<std::vector<Cell>>().size(), 3u);
    }
}

TEST(CliEnumerateTest, CsvHeaderAndRows)
{
    const auto r = invoke({"enumerate", "--classes", "1,1", "--k", "2", "--format", "csv"});
    EXPECT_EQ(r.out, "f0_c0,f0_c1,f1_c0,f1_c1\n0,1,1,0\n");
}

TEST(CliEnumerateTest, PostOperativeCsvLineCountMatchesCount)
{
    const auto listing = invoke({"enumerate", "--classes", "2,24,64", "--k", "5", "--format", "csv"});
    ASSERT_EQ(listing.code, kOk);
    const auto lines = lines_of(listing.out);
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines.front(), csv_header(5, 3));
    const auto count = invoke({"count", "--classes", "2,24,64", "--k", "5"});
    EXPECT_EQ(std::to_string(lines.size() - 1) + "\n", count.out);
}

TEST(CliEnumerateTest, LimitGivesPrefixOfStream)
{
    const auto full = lines_of(invoke({"enumerate", "--classes", "3,4,5", "--k", "3"}).out);
    const auto head = invoke({"enumerate", "--classes", "3,4,5", "--k", "3", "--limit", "10"});
    ASSERT_EQ(head.code, kOk);
    const auto lines = lines_of(head.out);
    ASSERT_EQ(lines.size(), 10u);
    EXPECT_TRUE(std::equal(lines.begin(), lines.end(), full.begin()));
    EXPECT_EQ(head.err, "10 configurations\n");

    const auto reference = oracle::oracle_enumerate(FoldSizes{4, 4, 4}, ClassDistribution{3, 4, 5});
    for (const auto& line : lines) {
        const auto rows = nlohmann::json::parse(line).at("folds").get<std::vector<std::vector<Cell>>>();
        EXPECT_TRUE(reference.count(standardize(FoldConfiguration(rows))) == 1) << line;
    }
}

TEST(CliEnumerateTest, WritesToOutFile)
{
    TempDir dir;
    const auto path = dir / "configs.jsonl";
    const auto r = invoke({"enumerate", "--classes", "3,4,5", "--k", "3", "--out", path.string()});
    ASSERT_EQ(r.code, kOk);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(path), invoke({"enumerate", "--classes", "3,4,5", "--k", "3"}).out);
}

TEST(CliEnumerateTest, UnwritableOutputIsIoError)
{
    TempDir dir;
    const auto path = dir / "missing" / "out.jsonl";
    EXPECT_EQ(invoke({"enumerate", "--classes", "1,1", "--k", "2", "--out", path.string()}).code, kIoError);
}

TEST(CliEnumerateTest, OutputIsDeterministic)
{
    const std::vector<std::string> args{"enumerate", "--classes", "5,3,4", "--k", "4", "--format", "csv"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliCountTest, Values)
{
    EXPECT_EQ(invoke({"count", "--classes", "10", "--k", "2"}).out, "1\n");
    EXPECT_EQ(invoke({"count", "--classes", "6,6", "--k", "3"}).out,
              oracle::oracle_count(FoldSizes{4, 4, 4}, ClassDistribution{6, 6}).str() + "\n");
    EXPECT_EQ(invoke({"count", "--classes", "2,24,64", "--k", "5", "--threads", "3"}).out,
              invoke({"count", "--classes", "2,24,64", "--k", "5"}).out);
}

TEST(CliCountTest, ZeroClassWarns)
{
    const auto r = invoke({"count", "--classes", "6,0", "--k", "2"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "1\n");
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliCountTest, TooManyFolds)
{
    EXPECT_EQ(invoke({"count", "--classes", "1,1", "--k", "3"}).code, kValidationError);
}

TEST(CliLabelsTest, LabelFileMatchesClassList)
{
    TempDir dir;
    const auto path = dir / "labels.txt";
    {
        std::ofstream f(path);
        // First appearance order: A, S, I  ->  (64, 24, 2)
        for (int i = 0; i < 90; ++i) {
            const char* label = i % 30 == 7 && i < 60 ? "I" : (i % 4 == 1 ? "S" : "A");
            f << "  " << label << " \r\n";
            if (i % 17 == 0)
                f << "\n";
        }
    }
    std::ifstream in(path);
    const ClassDistribution counts = read_label_counts(in);
    const auto by_file = invoke({"enumerate", "--labels-file", path.string(), "--k", "5", "--format", "csv"});
    std::string list;
    for (std::size_t j = 0; j < counts.size(); ++j)
        list += (j ? "," : "") + std::to_string(counts[j]);
    const auto by_list = invoke({"enumerate", "--classes", list, "--k", "5", "--format", "csv"});
    ASSERT_EQ(by_file.code, kOk);
    EXPECT_EQ(by_file.out, by_list.out);
    EXPECT_EQ(counts.total(), 90);
}

TEST(CliLabelsTest, FirstAppearanceOrder)
{
    std::istringstream in("b\na\n\nb\n c \nb\n");
    const ClassDistribution c = read_label_counts(in);
    EXPECT_EQ(std::vector<Cell>(c.counts().begin(), c.counts().end()), (std::vector<Cell>{3, 1, 1}));
}

TEST(CliLabelsTest, EmptyAndMissingFiles)
{
    TempDir dir;
    const auto empty = dir / "empty.txt";
    std::ofstream(empty) << "\n  \n";
    EXPECT_EQ(invoke({"count", "--labels-file", empty.string(), "--k", "2"}).code, kValidationError);
    EXPECT_EQ(invoke({"count", "--labels-file", (dir / "nope.txt").string(), "--k", "2"}).code, kIoError);
}

TEST(CliSweepTest, PostOperativeRow)
{
    const auto r = invoke({"sweep", "--classes", "2,24,64", "--k-min", "5", "--k-max", "5"});
    ASSERT_EQ(r.code, kOk);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0], "k,sizes,count,elapsed_ms");
    EXPECT_EQ(lines[1].rfind("5,18|18|18|18|18,3364,", 0), 0u) << lines[1];
}

TEST(CliSweepTest, RowsMatchCountPerFoldCount)
{
    const auto r = invoke({"sweep", "--classes", "20,54,26", "--k-min", "2", "--k-max", "4", "--format", "csv"});
    ASSERT_EQ(r.code, kOk);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 4u);
    for (int k = 2; k <= 4; ++k) {
        const auto& line = lines[static_cast<std::size_t>(k - 1)];
        const auto count = invoke({"count", "--classes", "20,54,26", "--k", std::to_string(k)}).out;
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        const auto third = line.find(',', second + 1);
        EXPECT_EQ(line.substr(0, first), std::to_string(k));
        EXPECT_EQ(line.substr(second + 1, third - second - 1) + "\n", count);
    }
}

TEST(CliSweepTest, DeterministicApartFromTiming)
{
    auto strip = [](const std::string& text) {
        std::string out;
        for (const auto& line : lines_of(text))
            out += line.substr(0, line.rfind(',')) + "\n";
        return out;
    };
    const std::vector<std::string> args{"sweep", "--classes", "3,4,5", "--k-min", "1", "--k-max", "6"};
    EXPECT_EQ(strip(invoke(args).out), strip(invoke(args).out));
}

TEST(CliSweepTest, RangeErrors)
{
    EXPECT_EQ(invoke({"sweep", "--classes", "1,1", "--k-min", "2", "--k-max", "3"}).code, kValidationError);
    EXPECT_EQ(invoke({"sweep", "--classes", "1,1", "--k-min", "2", "--k-max", "2", "--format", "jsonl"}).code,
              kValidationError);
}

} // namespace
} // namespace foldenum::cli
