#pragma once

// Minimal CSV reading/writing. Handles quoted fields with embedded commas,
// quotes, and newlines; that is all the pipeline's schemas need. Numeric
// output uses shortest round-trip formatting so files are byte-stable.

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace cdrtarget {

std::string format_double(double v);
std::string format_int(std::int64_t v);

class CsvReader {
 public:
  // Throws std::runtime_error if the file cannot be opened or has no header.
  explicit CsvReader(const std::string& path);

  const std::vector<std::string>& header() const { return header_; }
  // Column index for `name`, or -1 if absent.
  int column(const std::string& name) const;

  // Reads the next record into `fields`. Returns false at end of file.
  bool next(std::vector<std::string>& fields);

  // Physical line number (1-based) where the last record started.
  std::size_t line_number() const { return record_line_; }

  const std::string& path() const { return path_; }

 private:
  bool read_record(std::vector<std::string>& fields);

  std::string path_;
  std::ifstream in_;
  std::vector<std::string> header_;
  std::size_t line_ = 0;
  std::size_t record_line_ = 0;
};

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void write_row(const std::vector<std::string>& fields);
  void close();

 private:
  std::ofstream out_;
};

}  // namespace cdrtarget
