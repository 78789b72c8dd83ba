package com.example.sync;

public class RefreshHandler {
    private static final Logger LOG = LoggerFactory.getLogger(RefreshHandler.class);

    public void onRefresh(Command command) {
        LOG.info("IntelliFlo received refresh command {}", command.getId());
        queue.offer(command);
    }

    public void start(int port) {
        LOG.debug("Starting receiver thread on port {}", port);
        thread.start();
        LOG.debug("Receiver thread start");
    }

    public void stop() {
        LOG.info("Stopping refresh handler");
        thread.join();
        LOG.info("Handler stoped, {} pending", queue.size());
    }
}
