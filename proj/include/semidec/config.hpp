#ifndef SEMIDEC_CONFIG_HPP
#define SEMIDEC_CONFIG_HPP

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace semidec {

/// Sectioned key-value config: [section] headers, key = value lines, # comments.
/// Round-trips losslessly through serialize() up to whitespace and comments.
class Config {
public:
    static Config parseString(const std::string& text, const std::string& origin = "<string>")
    {
        Config cfg;
        std::istringstream in(text);
        std::string line;
        std::string section;
        size_t lineNo = 0;
        while (std::getline(in, line)) {
            ++lineNo;
            std::string t = trim(stripComment(line));
            if (t.empty()) continue;
            if (t.front() == '[') {
                if (t.back() != ']')
                    throw Error(Errc::ParseError,
                                origin + ":" + std::to_string(lineNo) + ": unterminated section header");
                section = trim(t.substr(1, t.size() - 2));
                if (section.empty())
                    throw Error(Errc::ParseError,
                                origin + ":" + std::to_string(lineNo) + ": empty section name");
                cfg.order_.push_back(section);
                cfg.sections_[section]; // ensure it exists even if empty
                continue;
            }
            size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw Error(Errc::ParseError,
                            origin + ":" + std::to_string(lineNo) + ": expected key = value");
            std::string key = trim(t.substr(0, eq));
            std::string val = trim(t.substr(eq + 1));
            if (key.empty())
                throw Error(Errc::ParseError, origin + ":" + std::to_string(lineNo) + ": empty key");
            auto& sec = cfg.sections_[section];
            if (cfg.sections_.find(section) != cfg.sections_.end() &&
                std::find(cfg.order_.begin(), cfg.order_.end(), section) == cfg.order_.end())
                cfg.order_.push_back(section);
            sec.keys.push_back(key);
            sec.values[key] = val;
        }
        return cfg;
    }

    static Config parseFile(const std::string& path)
    {
        std::ifstream in(path);
        if (!in) throw Error(Errc::ParseError, "cannot open config file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parseString(buf.str(), path);
    }

    bool has(const std::string& section, const std::string& key) const
    {
        auto it = sections_.find(section);
        return it != sections_.end() && it->second.values.count(key) > 0;
    }

    const std::string& get(const std::string& section, const std::string& key) const
    {
        auto it = sections_.find(section);
        if (it == sections_.end() || !it->second.values.count(key))
            throw Error(Errc::ParseError, "missing config key [" + section + "] " + key);
        return it->second.values.at(key);
    }

    std::string getOr(const std::string& section, const std::string& key,
                      const std::string& fallback) const
    {
        return has(section, key) ? get(section, key) : fallback;
    }

    uint64_t getUint(const std::string& section, const std::string& key) const
    {
        const std::string& v = get(section, key);
        try {
            size_t pos = 0;
            uint64_t r = std::stoull(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw Error(Errc::ParseError, "[" + section + "] " + key + ": not an integer: " + v);
        }
    }

    uint64_t getUintOr(const std::string& section, const std::string& key, uint64_t fallback) const
    {
        return has(section, key) ? getUint(section, key) : fallback;
    }

    void set(const std::string& section, const std::string& key, const std::string& value)
    {
        if (sections_.find(section) == sections_.end()) order_.push_back(section);
        auto& sec = sections_[section];
        if (!sec.values.count(key)) sec.keys.push_back(key);
        sec.values[key] = value;
    }

    std::string serialize() const
    {
        std::ostringstream out;
        for (const std::string& name : order_) {
            out << '[' << name << "]\n";
            const Section& sec = sections_.at(name);
            for (const std::string& key : sec.keys) out << key << " = " << sec.values.at(key) << '\n';
            out << '\n';
        }
        return out.str();
    }

private:
    struct Section {
        std::vector<std::string> keys; // insertion order
        std::map<std::string, std::string> values;
    };

    std::map<std::string, Section> sections_;
    std::vector<std::string> order_;

    static std::string stripComment(const std::string& s)
    {
        size_t pos = s.find('#');
        return pos == std::string::npos ? s : s.substr(0, pos);
    }

    static std::string trim(const std::string& s)
    {
        size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
        return s.substr(a, b - a);
    }
};

} // namespace semidec

#endif
