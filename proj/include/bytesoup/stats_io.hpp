#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "bytesoup/analysis.hpp"

namespace bytesoup {

inline std::string epoch_stats_header() {
    return "epoch,shannon_bits_per_byte,compressed_size_bytes,high_order_entropy,"
           "unique_token_count,top32_token_count,zero_byte_count,"
           "mean_steps_executed,compressor";
}

inline std::string epoch_stats_row(const EpochStats& s, const std::string& compressor) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%u,%.6f,%llu,%.6f,%llu,%llu,%llu,%.4f,%s",
                  s.epoch, s.shannon_bits_per_byte,
                  static_cast<unsigned long long>(s.compressed_size_bytes),
                  s.high_order_entropy,
                  static_cast<unsigned long long>(s.unique_token_count),
                  static_cast<unsigned long long>(s.top32_token_count),
                  static_cast<unsigned long long>(s.zero_byte_count),
                  s.mean_steps_executed, compressor.c_str());
    return buf;
}

inline std::string longtape_stats_header() {
    return "generation,high_order_entropy,mean_instructions_per_window,"
           "mutations_applied";
}

// Streams rows to a CSV file as they arrive.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& header) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open for writing: " + path);
        out_ << header << "\n";
    }
    void row(const std::string& line) {
        out_ << line << "\n";
        out_.flush();
    }

  private:
    std::ofstream out_;
};

}  // namespace bytesoup
