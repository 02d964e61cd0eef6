#include "ftor/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace ftor {

void run_ordered(std::size_t start, std::size_t count, int workers,
                 const std::function<WorkPiece(std::size_t)>& job,
                 const std::function<void(std::size_t, WorkPiece&&)>& sink) {
    if (workers < 1) workers = 1;
    std::atomic<std::size_t> next{start};
    std::mutex mtx;
    std::condition_variable cv;
    std::map<std::size_t, WorkPiece> done;
    std::size_t write_at = start;
    const std::size_t lead = static_cast<std::size_t>(workers) * 4 + 4;

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            {
                // Cap how far results may run ahead of the writer.
                std::unique_lock<std::mutex> lk(mtx);
                cv.wait(lk, [&] { return i < write_at + lead; });
            }
            WorkPiece piece = job(i);
            {
                std::lock_guard<std::mutex> lk(mtx);
                done.emplace(i, std::move(piece));
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

    while (write_at < count) {
        WorkPiece piece;
        {
            std::unique_lock<std::mutex> lk(mtx);
            cv.wait(lk, [&] { return done.count(write_at) != 0; });
            auto it = done.find(write_at);
            piece = std::move(it->second);
            done.erase(it);
        }
        sink(write_at, std::move(piece));
        {
            std::lock_guard<std::mutex> lk(mtx);  // workers read write_at in their wait predicate
            ++write_at;
        }
        cv.notify_all();
    }
    for (auto& t : pool) t.join();
}

struct StreamPipeline::Impl {
    std::function<WorkPiece(std::uint64_t, std::string&&)> map;
    std::function<void(std::uint64_t, WorkPiece&&)> sink;
    int workers;

    std::mutex mtx;
    std::condition_variable cv;
    std::deque<std::pair<std::uint64_t, std::string>> queue;
    std::map<std::uint64_t, WorkPiece> done;
    std::uint64_t pushed = 0;
    std::uint64_t write_at = 0;
    bool eof = false;
    std::vector<std::thread> pool;

    std::size_t cap() const { return static_cast<std::size_t>(workers) * 4 + 4; }

    void worker() {
        while (true) {
            std::pair<std::uint64_t, std::string> item;
            {
                std::unique_lock<std::mutex> lk(mtx);
                cv.wait(lk, [&] { return !queue.empty() || eof; });
                if (queue.empty()) return;
                item = std::move(queue.front());
                queue.pop_front();
            }
            cv.notify_all();
            WorkPiece piece = map(item.first, std::move(item.second));
            {
                std::lock_guard<std::mutex> lk(mtx);
                done.emplace(item.first, std::move(piece));
            }
            cv.notify_all();
        }
    }

    // Hand every contiguous finished piece to the sink; caller thread only.
    void drain_ready() {
        while (true) {
            WorkPiece piece;
            {
                std::lock_guard<std::mutex> lk(mtx);
                auto it = done.find(write_at);
                if (it == done.end()) return;
                piece = std::move(it->second);
                done.erase(it);
            }
            sink(write_at, std::move(piece));
            ++write_at;
            cv.notify_all();
        }
    }
};

StreamPipeline::StreamPipeline(int workers,
                               std::function<WorkPiece(std::uint64_t, std::string&&)> map,
                               std::function<void(std::uint64_t, WorkPiece&&)> sink)
    : impl_(new Impl{std::move(map), std::move(sink), workers < 1 ? 1 : workers,
                     {}, {}, {}, {}, 0, 0, false, {}}) {
    for (int w = 0; w < impl_->workers; ++w)
        impl_->pool.emplace_back([this] { impl_->worker(); });
}

StreamPipeline::~StreamPipeline() {
    finish();
    delete impl_;
}

void StreamPipeline::push(std::string&& block) {
    {
        std::unique_lock<std::mutex> lk(impl_->mtx);
        impl_->cv.wait(lk, [&] { return impl_->queue.size() < impl_->cap(); });
        impl_->queue.emplace_back(impl_->pushed++, std::move(block));
    }
    impl_->cv.notify_all();
    impl_->drain_ready();
}

void StreamPipeline::finish() {
    if (impl_->pool.empty()) return;
    {
        std::lock_guard<std::mutex> lk(impl_->mtx);
        impl_->eof = true;
    }
    impl_->cv.notify_all();
    while (true) {
        impl_->drain_ready();
        if (impl_->write_at >= impl_->pushed) break;
        std::unique_lock<std::mutex> lk(impl_->mtx);
        impl_->cv.wait(lk, [&] { return impl_->done.count(impl_->write_at) != 0; });
    }
    for (auto& t : impl_->pool) t.join();
    impl_->pool.clear();
}

}  // namespace ftor
