#ifndef MACSIM_RNG_HPP
#define MACSIM_RNG_HPP

#include <cstdint>
#include <vector>

namespace macsim {

// xoshiro256** seeded through splitmix64. Self-contained so that streams are
// bit-identical across compilers and platforms (std distributions are not).
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    // Independent substream addressed by (seed, stream, round).
    static Rng stream(uint64_t seed, uint64_t stream_id, uint64_t round) {
        uint64_t x = seed;
        uint64_t a = splitmix64(x);
        x ^= 0x9e3779b97f4a7c15ULL * (stream_id + 1);
        uint64_t b = splitmix64(x);
        x ^= 0xbf58476d1ce4e5b9ULL * (round + 1);
        uint64_t c = splitmix64(x);
        Rng r(a ^ (b << 1) ^ (c << 2));
        r.state_[1] ^= b;
        r.state_[2] ^= c;
        r.next_u64();
        return r;
    }

    uint64_t next_u64() {
        uint64_t* s = state_;
        uint64_t result = rotl(s[1] * 5, 7) * 9;
        uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Samples an index from a probability vector by cumulative scan.
    int sample(const std::vector<double>& probs) {
        double u = next_double();
        double acc = 0.0;
        int last = 0;
        for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
            if (probs[i] <= 0.0) continue;
            acc += probs[i];
            last = i;
            if (u < acc) return i;
        }
        return last;
    }

    // Forks a child stream; advances this stream.
    Rng fork() { return Rng(next_u64() ^ 0xd1b54a32d192ed03ULL); }

private:
    static uint64_t splitmix64(uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    uint64_t state_[4];
};

}  // namespace macsim

#endif
