#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace barq {

using Json = nlohmann::ordered_json;

// Wall-clock timer for the optional elapsed_ms report field.
class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Uniform run envelope for every CLI subcommand.  With include_timing false
// the elapsed_ms field is omitted entirely, making repeated runs with the same
// seed and inputs byte-identical (exact arithmetic keeps every other field
// deterministic at any thread count).
struct RunReport {
  std::string command;
  Json params = Json::object();
  Json results = Json::object();
  bool pass = true;
  bool include_timing = true;
  double elapsed_ms = 0.0;

  Json to_json() const;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_escape(const std::string& field);
std::string to_csv(const CsvTable& table);

// Writes to the path, or to stdout when the path is empty.
void write_output(const std::string& text, const std::string& out_path);

}  // namespace barq
