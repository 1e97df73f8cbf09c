#include "fopid/config.hpp"

#include <fstream>
#include <sstream>

#include "kv_detail.hpp"

namespace fopid {

namespace {

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw ConfigError("bad boolean value for '" + key + "': " + v);
}

}  // namespace

DesignConfig DesignConfig::from_text(const std::string& text) {
  DesignConfig cfg;
  std::istringstream is(text);
  std::string line;
  bool in_branch_section = false;

  while (std::getline(is, line)) {
    const detail::KvLine kv = detail::parse_kv_line(line);
    switch (kv.kind) {
      case detail::KvLine::Kind::Blank:
      case detail::KvLine::Kind::Comment:
        break;
      case detail::KvLine::Kind::Malformed:
        throw ConfigError("malformed config line: " + kv.value);
      case detail::KvLine::Kind::Section:
        // [controller] introduces the parameter block; exported [branch ...]
        // payload sections are recognized and skipped.
        if (kv.key == "controller") in_branch_section = false;
        else if (kv.key.rfind("branch ", 0) == 0) in_branch_section = true;
        else throw ConfigError("unknown config section: [" + kv.key + "]");
        break;
      case detail::KvLine::Kind::Pair: {
        if (in_branch_section) break;
        try {
          if (kv.key == "format") {
            if (kv.value != "flat-table")
              throw ConfigError("unsupported format: " + kv.value);
          } else if (kv.key == "gf") cfg.params.gf.kind = gf_kind_from_string(kv.value);
          else if (kv.key == "T")
            cfg.params.gf = GeneratingFunction(cfg.params.gf.kind,
                                               detail::parse_double(kv.value, kv.key));
          else if (kv.key == "pq") {
            cfg.params.p = static_cast<int>(detail::parse_long(kv.value, kv.key));
            cfg.params.q = cfg.params.p;
          } else if (kv.key == "K") cfg.params.K = detail::parse_double(kv.value, kv.key);
          else if (kv.key == "Ti") cfg.params.Ti = detail::parse_double(kv.value, kv.key);
          else if (kv.key == "Td") cfg.params.Td = detail::parse_double(kv.value, kv.key);
          else if (kv.key == "lambda") cfg.params.lambda = detail::parse_double(kv.value, kv.key);
          else if (kv.key == "delta") cfg.params.delta = detail::parse_double(kv.value, kv.key);
          else if (kv.key == "adc_bits")
            cfg.quant.adc_bits = static_cast<int>(detail::parse_long(kv.value, kv.key));
          else if (kv.key == "dac_bits")
            cfg.quant.dac_bits = static_cast<int>(detail::parse_long(kv.value, kv.key));
          else if (kv.key == "v_min") cfg.quant.v_min = detail::parse_double(kv.value, kv.key);
          else if (kv.key == "v_max") cfg.quant.v_max = detail::parse_double(kv.value, kv.key);
          else if (kv.key == "adc_quant") cfg.quant.adc_enabled = parse_bool(kv.value, kv.key);
          else if (kv.key == "dac_quant") cfg.quant.dac_enabled = parse_bool(kv.value, kv.key);
          else if (kv.key == "out") cfg.out = kv.value;
          else throw ConfigError("unknown config key: " + kv.key);
        } catch (const ConfigError&) {
          throw;
        } catch (const std::invalid_argument& ex) {
          throw ConfigError(ex.what());
        }
        break;
      }
    }
  }
  return cfg;
}

DesignConfig DesignConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileOpenError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

std::vector<std::string> DesignConfig::warnings() const {
  std::vector<std::string> out;
  if (!params.gf.t_in_design_range())
    out.push_back("sample period " + format_g17(params.gf.T) +
                  " s lies outside the designed range [0.001, 120] s");
  return out;
}

}  // namespace fopid
