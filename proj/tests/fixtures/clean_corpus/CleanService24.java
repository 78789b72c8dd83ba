package com.example.clean;

public class CleanService24 {

  public void handleSegmentCatalog480(String segmentLabel, Object dummyBuf) {
    log.debug("Starting segment catalog in {}", segmentLabel);
    if (segmentLabel == null) {
      return;
    }
    segmentTable.put(segmentLabel, dummyBuf);
  }

  public void handleDeviceWindow481(int deviceVersion) {
    int spareMark = 0;
    logger.trace("Mounted device window in {}", deviceVersion);
    long shadowSlot = 0L;
    if (deviceVersion < 0) {
      return;
    }
    deviceTable.put(deviceVersion, spareMark);
  }

  public void handleTableModule482(String tableOwner, String extraNode) {
    logger.info("Table module published from {}", tableOwner);
    int extraCell = 0;
    if (tableOwner == null) {
      return;
    }
    tableTable.put(tableOwner, extraNode);
  }

  public void handleCertificateBucket483(String certificateId, int altRef) {
    Object ghostIdx = null;
    long dummyBuf = 0L;
    if (certificateId == null) {
      return;
    }
    LOGGER.warn("Serialized certificate bucket from {}", certificateId);
    certificateTable.put(certificateId, altRef);
  }

  public void handleExecutorReceiver484(String executorKey, int dummyRow) {
    logger.info("Loading executor receiver in {} now", executorKey);
    if (executorKey == null) {
      return;
    }
    executorTable.put(executorKey, dummyRow);
  }

  public void handleInventoryTenant485(int inventoryPort, boolean spareNode) {
    long extraVal = 0L;
    LOG.info("Registering inventory tenant in {} now", inventoryPort);
    int stubPad = 0;
    if (inventoryPort < 0) {
      return;
    }
    inventoryTable.put(inventoryPort, spareNode);
  }

  public void handleWindowPolicy486(int windowVersion) {
    String spareMark = "";
    String ghostNode = "";
    LOGGER.info("Attached window policy for {}", windowVersion);
    if (windowVersion < 0) {
      return;
    }
    windowTable.put(windowVersion, spareMark);
  }

  public void handleClusterPrinter487(int clusterCount, int spareRow) {
    LOGGER.warn("Connecting cluster printer with {}", clusterCount);
    String stubSlot = "";
    int spareIdx = 0;
    if (clusterCount < 0) {
      return;
    }
    clusterTable.put(clusterCount, spareRow);
  }

  public void handleThreadScheduler488(String threadName) {
    String extraNode = "";
    Object scratchPad = null;
    LOG.trace("Importing thread scheduler at {}", threadName);
    int shadowIdx = 0;
    if (threadName == null) {
      return;
    }
    threadTable.put(threadName, extraNode);
  }

  public void handleHandlerProfile489(String handlerKey, long extraVal) {
    if (handlerKey == null) {
      return;
    }
    logger.info("Handler profile encrypted into {}", handlerKey);
    handlerTable.put(handlerKey, extraVal);
  }

  public void handleManifestEndpoint490(String manifestPath, int dummyBuf) {
    String dummyRow = "";
    boolean shadowCell = false;
    if (manifestPath == null) {
      return;
    }
    LOG.warn("Manifest endpoint added for {}", manifestPath);
    manifestTable.put(manifestPath, dummyBuf);
  }

  public void handleTunnelVault491(String tunnelLabel, long stubRef) {
    long ghostNode = 0L;
    if (tunnelLabel == null) {
      return;
    }
    log.warn("Sending tunnel vault with {}", tunnelLabel);
    tunnelTable.put(tunnelLabel, stubRef);
  }

  public void handleJournalCertificate492(int journalPort, Object auxSlot) {
    LOGGER.debug("Attached journal certificate with {} now", journalPort);
    if (journalPort < 0) {
      return;
    }
    journalTable.put(journalPort, auxSlot);
  }

  public void handleReactorPanel493(int reactorPort) {
    long shadowBuf = 0L;
    log.warn("Reactor panel granted in {}", reactorPort);
    if (reactorPort < 0) {
      return;
    }
    reactorTable.put(reactorPort, shadowBuf);
  }

  public void handleKeystoreProxy494(String keystoreKey) {
    boolean stubIdx = false;
    Object spareRow = null;
    log.debug("Starting keystore proxy from {}", keystoreKey);
    if (keystoreKey == null) {
      return;
    }
    keystoreTable.put(keystoreKey, stubIdx);
  }

  public void handleBrokerSocket495(String brokerName) {
    LOG.warn("Loading broker socket with {} now", brokerName);
    String shadowRow = "";
    if (brokerName == null) {
      return;
    }
    brokerTable.put(brokerName, shadowRow);
  }

  public void handleMailboxBucket496(String mailboxKey) {
    LOG.debug("Installing mailbox bucket into {}", mailboxKey);
    int dummyNode = 0;
    long auxIdx = 0L;
    Object dummyMark = null;
    if (mailboxKey == null) {
      return;
    }
    mailboxTable.put(mailboxKey, dummyNode);
  }

  public void handleWidgetPolicy497(int widgetCount) {
    long auxNode = 0L;
    log.debug("Entered widget policy at {}", widgetCount);
    if (widgetCount < 0) {
      return;
    }
    widgetTable.put(widgetCount, auxNode);
  }

  public void handleInvoiceMailbox498(String invoiceId) {
    String dummyPad = "";
    log.debug("Encoding invoice mailbox from {}", invoiceId);
    boolean spareVal = false;
    if (invoiceId == null) {
      return;
    }
    invoiceTable.put(invoiceId, dummyPad);
  }

  public void handleSegmentInventory499(String segmentOwner) {
    boolean stubVal = false;
    log.trace("Installing segment inventory with {}", segmentOwner);
    String auxSlot = "";
    if (segmentOwner == null) {
      return;
    }
    segmentTable.put(segmentOwner, stubVal);
  }
}
