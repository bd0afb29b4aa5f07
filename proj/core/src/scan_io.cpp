#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lcmf/analytics.hpp"

namespace lcmf {

namespace {

nlohmann::ordered_json record_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["log_rho"] = r.log_rho;
  j["log_sigma"] = r.log_sigma;
  j["residual_rho"] = r.residual_rho;
  j["residual_sigma"] = r.residual_sigma;
  j["card_A"] = r.card_A;
  j["conj2_stat"] = r.conj2_stat;
  j["s1"] = r.s1;
  j["s2"] = r.s2;
  return j;
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected csv or json)");
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string ScanWriter::csv_header() {
  return "n,log_rho,log_sigma,residual_rho,residual_sigma,card_A,conj2_stat,s1,s2";
}

ScanWriter::ScanWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {
  if (format_ == OutputFormat::Csv) {
    out_ << csv_header() << '\n';
  } else {
    out_ << '[';
  }
}

void ScanWriter::write(const ScanRecord& r) {
  if (finished_) throw std::logic_error("ScanWriter: write after finish");
  if (format_ == OutputFormat::Csv) {
    out_ << r.n << ',' << format_double(r.log_rho) << ',' << format_double(r.log_sigma) << ','
         << format_double(r.residual_rho) << ',' << format_double(r.residual_sigma) << ','
         << r.card_A << ',' << format_double(r.conj2_stat) << ',' << format_double(r.s1) << ','
         << format_double(r.s2) << '\n';
  } else {
    out_ << (written_ ? ",\n" : "\n") << record_json(r).dump();
  }
  ++written_;
}

void ScanWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == OutputFormat::Json) out_ << (written_ ? "\n]\n" : "]\n");
  out_.flush();
}

std::string render_blocks_csv(const std::vector<BlockSummary>& blocks) {
  std::string out =
      "j,count,rho_sup,sigma_sup,prop10_sup,conj2_min,conj2_max,card_envelope_sup,c_uncertainty\n";
  for (const auto& b : blocks) {
    out += std::to_string(b.j) + ',' + std::to_string(b.count) + ',' + format_double(b.rho_sup) +
           ',' + format_double(b.sigma_sup) + ',' + format_double(b.prop10_sup) + ',' +
           format_double(b.conj2_min) + ',' + format_double(b.conj2_max) + ',' +
           format_double(b.card_envelope_sup) + ',' + format_double(b.c_uncertainty) + '\n';
  }
  return out;
}

std::string render_blocks_json(const std::vector<BlockSummary>& blocks) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& b : blocks) {
    nlohmann::ordered_json j;
    j["j"] = b.j;
    j["count"] = b.count;
    j["rho_sup"] = b.rho_sup;
    j["sigma_sup"] = b.sigma_sup;
    j["prop10_sup"] = b.prop10_sup;
    j["conj2_min"] = b.conj2_min;
    j["conj2_max"] = b.conj2_max;
    j["card_envelope_sup"] = b.card_envelope_sup;
    j["c_uncertainty"] = b.c_uncertainty;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + '\n';
}

std::string gnuplot_script(const std::string& csv_path) {
  return "set datafile separator ','\n"
         "set key autotitle columnhead\n"
         "set logscale x 2\n"
         "set xlabel 'n'\n"
         "set multiplot layout 2,1\n"
         "plot '" + csv_path + "' using 1:($4/sqrt($1)) with lines title 'residual_rho / sqrt(n)'\n"
         "plot '" + csv_path + "' using 1:($5/sqrt($1*log($1))) with lines "
         "title 'residual_sigma / sqrt(n log n)'\n"
         "unset multiplot\n";
}

}  // namespace lcmf
