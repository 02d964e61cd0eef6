#ifndef FTOR_PARALLEL_HPP
#define FTOR_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace ftor {

// Result of one unit of stage work: graphs examined, graphs kept, and the
// kept graphs as newline-terminated graph6 text.
struct WorkPiece {
    std::uint64_t scanned = 0;
    std::uint64_t kept = 0;
    std::string lines;
};

// Runs jobs [start, count) on `workers` threads; results reach `sink` in
// strict job order on the calling thread. Memory stays bounded because a
// worker whose index runs too far ahead of the writer waits.
void run_ordered(std::size_t start, std::size_t count, int workers,
                 const std::function<WorkPiece(std::size_t)>& job,
                 const std::function<void(std::size_t, WorkPiece&&)>& sink);

// Order-preserving parallel map over a stream of blocks pushed by the
// caller. push() may block while workers catch up; results are delivered to
// the sink, in push order, from inside push()/finish() on the caller thread.
class StreamPipeline {
public:
    StreamPipeline(int workers, std::function<WorkPiece(std::uint64_t, std::string&&)> map,
                   std::function<void(std::uint64_t, WorkPiece&&)> sink);
    ~StreamPipeline();

    StreamPipeline(const StreamPipeline&) = delete;
    StreamPipeline& operator=(const StreamPipeline&) = delete;

    void push(std::string&& block);
    void finish();

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace ftor

#endif
