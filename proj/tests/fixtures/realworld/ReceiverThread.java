public class DigiplexBridgeHandler extends BaseBridgeHandler {
    private class DigiplexReceiverThread extends Thread {
        @Override
        public void run() {
            logger.debug("Starting receiver thread");
            while (!isInterrupted()) {
                Optional<String> message = readLineBlocking();
                message.ifPresent(m -> handleMessage(m));
            }
        }
    }
}
