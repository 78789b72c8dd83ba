public class SequenceGeneratorSource extends AbstractPollableSource {
    @Override
    protected void doStart() throws FlumeException {
        logger.info("Sequence generator source do starting");
        sourceCounter.start();
    }
}
