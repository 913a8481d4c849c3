#ifndef FOLDENUM_TOOLS_CLI_HPP
#define FOLDENUM_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "foldenum/configuration.hpp"

namespace foldenum::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationError = 2,
    kIoError = 3,
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Jsonl, Csv };

// "2,24,64" -> (2, 24, 64). Throws std::invalid_argument on malformed
// input.
ClassDistribution parse_class_list(std::string_view text);

// One label per line, surrounding whitespace trimmed, blank lines skipped.
// Classes are numbered in order of first appearance.
ClassDistribution read_label_counts(std::istream& in);
ClassDistribution read_label_file(const std::filesystem::path& path);

std::string csv_header(std::size_t folds, std::size_t classes);

// Appends one record without a trailing newline.
void append_jsonl(std::string& out, const FoldConfiguration& f);
void append_csv(std::string& out, const FoldConfiguration& f);

// Entry point shared by the executable and the tests. args excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace foldenum::cli

#endif
