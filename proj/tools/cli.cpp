#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "foldenum/counting.hpp"
#include "foldenum/partition.hpp"

namespace foldenum::cli {

namespace {

constexpr std::size_t kFlushThreshold = 1 << 16;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n\v\f");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n\v\f");
    return s.substr(first, last - first + 1);
}

void append_int(std::string& out, Cell v)
{
    char buf[24];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, end);
}

// Owns the destination of --out; stdout when the path is empty or "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (path.empty() || path == "-")
            return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_)
            throw IoError("cannot open output file: " + path);
        stream_ = file_.get();
        path_ = path;
    }

    void write(std::string& buffer, bool force = false)
    {
        if (!force && buffer.size() < kFlushThreshold)
            return;
        stream_->write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        buffer.clear();
        check();
    }

    void finish()
    {
        stream_->flush();
        check();
    }

private:
    void check() const
    {
        if (!*stream_)
            throw IoError(path_.empty() ? std::string("write to standard output failed")
                                        : "write to " + path_ + " failed");
    }

    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
    std::string path_;
};

struct InstanceOptions {
    std::string classes;
    std::string labels_file;
};

void add_instance_options(CLI::App& cmd, InstanceOptions& opts)
{
    auto* classes = cmd.add_option("--classes", opts.classes, "Comma-separated per-class record counts, e.g. 2,24,64");
    auto* labels = cmd.add_option("--labels-file", opts.labels_file, "Text file with one class label per line");
    classes->excludes(labels);
    labels->excludes(classes);
}

ClassDistribution load_instance(const InstanceOptions& opts, std::ostream& err)
{
    if (opts.classes.empty() && opts.labels_file.empty())
        throw std::invalid_argument("one of --classes or --labels-file is required");
    ClassDistribution classes =
        opts.classes.empty() ? read_label_file(opts.labels_file) : parse_class_list(opts.classes);
    for (std::size_t j = 0; j < classes.size(); ++j)
        if (classes[j] == 0)
            err << "warning: class " << j << " has no records; its column is always zero\n";
    return classes;
}

FoldSizes sizes_for(const ClassDistribution& classes, Cell k)
{
    return fold_sizes(classes.total(), k);
}

int cmd_sizes(Cell n, Cell k, std::ostream& out)
{
    const FoldSizes sizes = fold_sizes(n, k);
    std::string line;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i)
            line += ',';
        append_int(line, sizes[i]);
    }
    out << line << '\n';
    return kOk;
}

int cmd_enumerate(const InstanceOptions& inst, Cell k, const std::string& out_path, Format format,
                  std::optional<std::uint64_t> limit, std::ostream& out, std::ostream& err)
{
    const ClassDistribution classes = load_instance(inst, err);
    PartitionEnumerator gen(sizes_for(classes, k), classes);

    Sink sink(out_path, out);
    std::string buffer;
    if (format == Format::Csv) {
        buffer = csv_header(gen.sizes().size(), classes.size());
        buffer += '\n';
    }

    std::uint64_t written = 0;
    while ((!limit || written < *limit) && gen.next()) {
        if (format == Format::Jsonl)
            append_jsonl(buffer, gen.current());
        else
            append_csv(buffer, gen.current());
        buffer += '\n';
        ++written;
        sink.write(buffer);
    }
    sink.write(buffer, true);
    sink.finish();
    err << written << " configurations\n";
    return kOk;
}

int cmd_count(const InstanceOptions& inst, Cell k, unsigned threads, std::ostream& out, std::ostream& err)
{
    const ClassDistribution classes = load_instance(inst, err);
    out << count_configurations(sizes_for(classes, k), classes, threads) << '\n';
    return kOk;
}

int cmd_sweep(const InstanceOptions& inst, Cell k_min, Cell k_max, const std::string& out_path, unsigned threads,
              std::ostream& out, std::ostream& err)
{
    const ClassDistribution classes = load_instance(inst, err);
    const auto rows = sweep(classes, k_min, k_max, threads);

    Sink sink(out_path, out);
    std::ostringstream table;
    table << "k,sizes,count,elapsed_ms\n";
    for (const auto& row : rows) {
        table << row.folds << ',';
        for (std::size_t i = 0; i < row.sizes.size(); ++i)
            table << (i ? "|" : "") << row.sizes[i];
        table << ',' << row.count << ',' << std::fixed << std::setprecision(3) << row.elapsed_ms << '\n';
    }
    std::string buffer = table.str();
    sink.write(buffer, true);
    sink.finish();
    return kOk;
}

} // namespace

ClassDistribution parse_class_list(std::string_view text)
{
    std::vector<Cell> counts;
    std::size_t pos = 0;
    for (;;) {
        const auto comma = text.find(',', pos);
        const auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        Cell value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed class list '" + std::string(text) + "'");
        counts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return ClassDistribution(std::move(counts));
}

ClassDistribution read_label_counts(std::istream& in)
{
    std::map<std::string, std::size_t, std::less<>> index;
    std::vector<Cell> counts;
    std::string line;
    while (std::getline(in, line)) {
        const auto label = trim(line);
        if (label.empty())
            continue;
        auto it = index.find(label);
        if (it == index.end()) {
            it = index.emplace(std::string(label), counts.size()).first;
            counts.push_back(0);
        }
        ++counts[it->second];
    }
    if (in.bad())
        throw IoError("error while reading labels");
    if (counts.empty())
        throw std::invalid_argument("labels file contains no labels");
    return ClassDistribution(std::move(counts));
}

ClassDistribution read_label_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open labels file: " + path.string());
    return read_label_counts(in);
}

std::string csv_header(std::size_t folds, std::size_t classes)
{
    std::string header;
    for (std::size_t i = 0; i < folds; ++i)
        for (std::size_t j = 0; j < classes; ++j) {
            if (i || j)
                header += ',';
            header += 'f' + std::to_string(i) + "_c" + std::to_string(j);
        }
    return header;
}

void append_jsonl(std::string& out, const FoldConfiguration& f)
{
    out += "{\"folds\":[";
    for (std::size_t i = 0; i < f.folds(); ++i) {
        if (i)
            out += ',';
        out += '[';
        for (std::size_t j = 0; j < f.classes(); ++j) {
            if (j)
                out += ',';
            append_int(out, f(i, j));
        }
        out += ']';
    }
    out += "]}";
}

void append_csv(std::string& out, const FoldConfiguration& f)
{
    const auto cells = f.cells();
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        if (idx)
            out += ',';
        append_int(out, cells[idx]);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Enumerate and count standardized k-fold configurations", "foldenum"};
    app.require_subcommand(1);

    Cell n = 0;
    Cell k = 0;
    Cell k_min = 0;
    Cell k_max = 0;
    unsigned threads = 1;
    std::string out_path;
    Format format = Format::Jsonl;
    std::optional<std::uint64_t> limit;
    InstanceOptions inst;

    const std::map<std::string, Format> formats{{"jsonl", Format::Jsonl}, {"csv", Format::Csv}};

    auto* sizes_cmd = app.add_subcommand("sizes", "Print the fold sizes for N records and k folds");
    sizes_cmd->add_option("--n", n, "Number of records")->required();
    sizes_cmd->add_option("--k", k, "Number of folds")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "Stream every standardized fold configuration");
    add_instance_options(*enum_cmd, inst);
    enum_cmd->add_option("--k", k, "Number of folds")->required();
    enum_cmd->add_option("--out", out_path, "Output file (default: standard output)");
    enum_cmd->add_option("--format", format, "jsonl or csv")->transform(CLI::CheckedTransformer(formats));
    enum_cmd->add_option("--limit", limit, "Stop after this many configurations");

    auto* count_cmd = app.add_subcommand("count", "Print the exact number of standardized fold configurations");
    add_instance_options(*count_cmd, inst);
    count_cmd->add_option("--k", k, "Number of folds")->required();
    count_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* sweep_cmd = app.add_subcommand("sweep", "Count configurations for a range of fold counts");
    add_instance_options(*sweep_cmd, inst);
    sweep_cmd->add_option("--k-min", k_min, "Smallest fold count")->required();
    sweep_cmd->add_option("--k-max", k_max, "Largest fold count")->required();
    sweep_cmd->add_option("--out", out_path, "Output file (default: standard output)");
    sweep_cmd->add_option("--format", format, "Table format (csv)")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::Csv}}));
    sweep_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }

    try {
        if (sizes_cmd->parsed())
            return cmd_sizes(n, k, out);
        if (enum_cmd->parsed())
            return cmd_enumerate(inst, k, out_path, format, limit, out, err);
        if (count_cmd->parsed())
            return cmd_count(inst, k, threads, out, err);
        return cmd_sweep(inst, k_min, k_max, out_path, threads, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }
}

} // namespace foldenum::cli
