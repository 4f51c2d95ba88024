#include "nonsimple/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "nonsimple/igusa.hpp"

namespace nonsimple {

std::string status_name(Classification::Status s) {
    switch (s) {
    case Classification::Status::certified_simple:
        return "simple";
    case Classification::Status::candidate_non_simple:
        return "candidate";
    case Classification::Status::degenerate:
        return "degenerate";
    }
    return "?";
}

namespace {

Classification::Status status_from_name(const std::string& s) {
    if (s == "simple")
        return Classification::Status::certified_simple;
    if (s == "candidate")
        return Classification::Status::candidate_non_simple;
    if (s == "degenerate")
        return Classification::Status::degenerate;
    throw invalid_input_error("unknown status \"" + s + "\"");
}

// FNV-1a over a canonical description; the cache key.
uint64_t scan_key(const FamilySpec& family, const Rat& t, unsigned long P_max,
                  const std::vector<unsigned>& k_test) {
    std::ostringstream os;
    os << "f=";
    for (const Int& c : family.f)
        os << c.get_str() << ",";
    os << ";t=" << t.str() << ";P=" << P_max << ";K=";
    for (unsigned k : k_test)
        os << k << ",";
    uint64_t h = 1469598103934665603ull;
    for (char ch : os.str()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

struct CacheEntry {
    Classification::Status status;
    std::optional<unsigned long> certifying_prime;
    unsigned long primes_tested;
};

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Append-only "key,t,status,certifying_prime,primes_tested" lines. A corrupt
// trailing line (truncated write) is ignored.
std::unordered_map<uint64_t, CacheEntry> load_cache(const std::string& path) {
    std::unordered_map<uint64_t, CacheEntry> cache;
    std::ifstream in(path);
    if (!in)
        return cache;
    std::string line;
    while (std::getline(in, line)) {
        auto parts = split(line, ',');
        if (parts.size() != 5)
            continue;
        try {
            CacheEntry e;
            uint64_t key = std::stoull(parts[0]);
            e.status = status_from_name(parts[2]);
            if (!parts[3].empty())
                e.certifying_prime = std::stoul(parts[3]);
            e.primes_tested = std::stoul(parts[4]);
            if (e.status == Classification::Status::certified_simple && !e.certifying_prime)
                continue;
            cache[key] = e;
        } catch (const std::exception&) {
            continue;
        }
    }
    return cache;
}

} // namespace

std::vector<ScanRecord> run_scan(const ScanConfig& config, ScanStats* stats) {
    if (config.B_max < 1)
        throw invalid_input_error("run_scan: B_max must be >= 1");
    if (config.B_max > 5000)
        throw resource_limit_error("run_scan: height bound beyond the census scale (max 5000)");
    if (config.P_max < 3)
        throw invalid_input_error("run_scan: P_max must be >= 3");
    const unsigned workers = std::clamp(config.workers, 1u, 256u);

    auto cache = load_cache(config.cache_path);
    std::ofstream cache_out;
    if (!config.cache_path.empty()) {
        cache_out.open(config.cache_path, std::ios::app);
        if (!cache_out)
            throw io_error("run_scan: cannot open cache for append: " + config.cache_path);
    }
    std::ofstream probe_out;
    if (!config.out_path.empty()) {
        probe_out.open(config.out_path, std::ios::app);
        if (!probe_out)
            throw io_error("run_scan: cannot open output: " + config.out_path);
        probe_out.close();
    }

    const std::vector<Rat> params = enumerate_rationals(config.B_max);
    std::vector<ScanRecord> records(params.size());
    std::vector<char> keep(params.size(), 1);

    std::atomic<size_t> next{0};
    std::atomic<unsigned long> computed{0}, hits{0};
    std::mutex cache_mutex;
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto record_error = [&]() {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error)
            first_error = std::current_exception();
        next.store(params.size()); // stop handing out work
    };

    auto worker_body = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= params.size())
                return;
            const Rat& t = params[i];
            ScanRecord rec;
            rec.t = t;
            rec.H_t = mult_height(t);
            bool degenerate = eval_at(config.family.f, t).is_zero();
            if (!degenerate) {
                GenusTwoCurve curve = specialize(config.family, t);
                rec.H_j = j_height(curve);
            }
            uint64_t key = scan_key(config.family, t, config.P_max, config.k_test);
            bool from_cache = false;
            {
                std::lock_guard<std::mutex> lock(cache_mutex);
                auto it = cache.find(key);
                if (it != cache.end()) {
                    rec.status = it->second.status;
                    rec.certifying_prime = it->second.certifying_prime;
                    rec.primes_tested = it->second.primes_tested;
                    from_cache = true;
                    hits.fetch_add(1);
                }
            }
            if (!from_cache) {
                Classification cls =
                    classify_parameter(config.family, t, config.P_max, config.k_test);
                rec.status = cls.status;
                if (cls.certificate)
                    rec.certifying_prime = cls.certificate->p;
                rec.primes_tested = cls.primes_tested;
                computed.fetch_add(1);
                std::lock_guard<std::mutex> lock(cache_mutex);
                cache[key] = CacheEntry{rec.status, rec.certifying_prime, rec.primes_tested};
                if (cache_out) {
                    cache_out << key << "," << t.str() << "," << status_name(rec.status) << ","
                              << (rec.certifying_prime ? std::to_string(*rec.certifying_prime)
                                                       : std::string())
                              << "," << rec.primes_tested << "\n";
                    cache_out.flush();
                }
            }
            if (config.height_mode == HeightMode::j_proxy && rec.H_j &&
                *rec.H_j > Int(static_cast<unsigned long>(config.B_max)))
                keep[i] = 0;
            records[i] = std::move(rec);
        }
    };
    auto worker = [&]() {
        try {
            worker_body();
        } catch (...) {
            record_error();
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    std::vector<ScanRecord> out;
    out.reserve(records.size());
    for (size_t i = 0; i < records.size(); ++i)
        if (keep[i])
            out.push_back(std::move(records[i]));
    std::sort(out.begin(), out.end(), [](const ScanRecord& a, const ScanRecord& b) {
        if (a.H_t != b.H_t)
            return a.H_t < b.H_t;
        return a.t < b.t;
    });

    if (stats) {
        stats->computed = computed.load();
        stats->cache_hits = hits.load();
    }
    if (!config.out_path.empty())
        write_csv(out, config.out_path);
    return out;
}

void write_csv(const std::vector<ScanRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw io_error("write_csv: cannot open " + path);
    out << "t,H_t,H_j,status,certifying_prime,primes_tested\n";
    for (const ScanRecord& r : records) {
        out << r.t.str() << "," << r.H_t.get_str() << ","
            << (r.H_j ? r.H_j->get_str() : std::string()) << "," << status_name(r.status) << ","
            << (r.certifying_prime ? std::to_string(*r.certifying_prime) : std::string()) << ","
            << r.primes_tested << "\n";
    }
    if (!out)
        throw io_error("write_csv: write failed: " + path);
}

std::vector<ScanRecord> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("read_csv: cannot open " + path);
    std::vector<ScanRecord> records;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (first) {
            first = false;
            if (line.rfind("t,", 0) == 0)
                continue; // header
        }
        auto parts = split(line, ',');
        if (parts.size() != 6)
            throw invalid_input_error("read_csv: malformed line: " + line);
        try {
            ScanRecord r;
            r.t = Rat::parse(parts[0]);
            r.H_t = Int(parts[1], 10);
            if (!parts[2].empty())
                r.H_j = Int(parts[2], 10);
            r.status = status_from_name(parts[3]);
            if (!parts[4].empty())
                r.certifying_prime = std::stoul(parts[4]);
            r.primes_tested = std::stoul(parts[5]);
            records.push_back(std::move(r));
        } catch (const invalid_input_error&) {
            throw;
        } catch (const std::exception&) {
            throw invalid_input_error("read_csv: malformed line: " + line);
        }
    }
    return records;
}

ScanReport report(const std::vector<ScanRecord>& records,
                  const std::vector<unsigned long>& B_grid, const BoundParams& params) {
    Int scanned_max = 0;
    for (const ScanRecord& r : records)
        if (r.H_t > scanned_max)
            scanned_max = r.H_t;
    for (unsigned long B : B_grid)
        if (!records.empty() && Int(B) > scanned_max)
            throw invalid_input_error("report: grid point " + std::to_string(B) +
                                      " exceeds the scanned range");

    ScanReport rep;
    std::vector<double> xs, ys;
    for (unsigned long B : B_grid) {
        ReportRow row;
        row.B = B;
        for (const ScanRecord& r : records) {
            if (r.H_t > Int(B))
                continue;
            ++row.total;
            if (r.status == Classification::Status::candidate_non_simple)
                ++row.candidates;
            else if (r.status == Classification::Status::certified_simple)
                ++row.certified;
        }
        double log_B = std::log(static_cast<double>(B));
        try {
            row.total_bound_log = total_bound_log(log_B, params);
        } catch (const below_threshold_error&) {
            row.total_bound_log = std::nullopt;
        }
        row.comparison_log = comparison_bound_log(log_B, params.g, 1.0, 1.0);
        if (row.candidates >= 1 && log_B > 1.0) {
            xs.push_back(std::log(log_B));
            ys.push_back(std::log(1.0 + static_cast<double>(row.candidates)));
        }
        rep.rows.push_back(row);
    }
    if (xs.size() >= 2) {
        double n = static_cast<double>(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        double denom = n * sxx - sx * sx;
        if (std::fabs(denom) > 1e-12)
            rep.kappa_emp = (n * sxy - sx * sy) / denom;
    }
    return rep;
}

Poly parse_coeff_list(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.empty())
        throw invalid_input_error("empty coefficient list");
    Poly p; // input is descending, Poly is ascending
    for (size_t i = parts.size(); i-- > 0;) {
        std::string tok = parts[i];
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty())
            throw invalid_input_error("empty coefficient in \"" + text + "\"");
        try {
            p.emplace_back(tok, 10);
        } catch (const std::invalid_argument&) {
            throw invalid_input_error("bad coefficient \"" + tok + "\"");
        }
    }
    return p;
}

FamilySpec load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open family file: " + path);
    std::string line;
    std::optional<Poly> f;
    std::string label;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key == "f")
            f = parse_coeff_list(value);
        else if (key == "label")
            label = value;
    }
    if (!f)
        throw invalid_input_error("family file has no \"f = ...\" line: " + path);
    return FamilySpec(*f, label);
}

} // namespace nonsimple
