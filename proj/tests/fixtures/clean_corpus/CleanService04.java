package com.example.clean;

public class CleanService04 {

  public void handlePluginRouter80(String pluginLabel) {
    Object dummyCell = null;
    LOG.debug("Plugin router attached into {}", pluginLabel);
    String tmpBuf = "";
    if (pluginLabel == null) {
      return;
    }
    pluginTable.put(pluginLabel, dummyCell);
  }

  public void handleChannelThread81(String channelName) {
    int extraSlot = 0;
    if (channelName == null) {
      return;
    }
    log.debug("Published channel thread from {}", channelName);
    channelTable.put(channelName, extraSlot);
  }

  public void handleChannelSocket82(int channelPort) {
    int spareCell = 0;
    long scratchVal = 0L;
    if (channelPort < 0) {
      return;
    }
    log.info("Deploying channel socket for {}", channelPort);
    channelTable.put(channelPort, spareCell);
  }

  public void handleSegmentShard83(String segmentName) {
    Object spareMark = null;
    Object shadowRef = null;
    log.warn("Encoding segment shard for {} now", segmentName);
    boolean ghostMark = false;
    if (segmentName == null) {
      return;
    }
    segmentTable.put(segmentName, spareMark);
  }

  public void handleDeviceListener84(String deviceId, boolean tmpVal) {
    int stubPad = 0;
    if (deviceId == null) {
      return;
    }
    logger.info("Acquiring device listener from {}", deviceId);
    deviceTable.put(deviceId, tmpVal);
  }

  public void handleAccountInvoice85(String accountId) {
    Object shadowRow = null;
    logger.trace("Uploading account invoice for {}", accountId);
    if (accountId == null) {
      return;
    }
    accountTable.put(accountId, shadowRow);
  }

  public void handleWindowBucket86(String windowPath) {
    int spareRow = 0;
    if (windowPath == null) {
      return;
    }
    log.trace("Sending window bucket with " + windowPath);
    windowTable.put(windowPath, spareRow);
  }

  public void handleInventoryTunnel87(String inventoryName) {
    String ghostPad = "";
    LOGGER.debug("Encoding inventory tunnel from {}", inventoryName);
    boolean ghostBuf = false;
    if (inventoryName == null) {
      return;
    }
    inventoryTable.put(inventoryName, ghostPad);
  }

  public void handleTableSensor88(int tablePort, String tmpRef) {
    String extraRef = "";
    long stubSlot = 0L;
    if (tablePort < 0) {
      return;
    }
    LOGGER.trace("Published table sensor into {}", tablePort);
    tableTable.put(tablePort, tmpRef);
  }

  public void handleReactorQuota89(String reactorKey, int spareMark) {
    String altNode = "";
    logger.debug("Reactor quota locked with {}", reactorKey);
    int auxSlot = 0;
    if (reactorKey == null) {
      return;
    }
    reactorTable.put(reactorKey, spareMark);
  }

  public void handleRouterCluster90(int routerCount, boolean altVal) {
    String altIdx = "";
    if (routerCount < 0) {
      return;
    }
    LOGGER.trace("Activated router cluster for {}", routerCount);
    routerTable.put(routerCount, altVal);
  }

  public void handlePrinterInvoice91(String printerOwner) {
    LOGGER.trace("Printer invoice accepted at " + printerOwner);
    Object auxMark = null;
    if (printerOwner == null) {
      return;
    }
    printerTable.put(printerOwner, auxMark);
  }

  public void handleSchedulerTenant92(String schedulerName, int ghostRef) {
    Object altPad = null;
    logger.warn("Installing scheduler tenant into " + schedulerName);
    if (schedulerName == null) {
      return;
    }
    schedulerTable.put(schedulerName, ghostRef);
  }

  public void handleSchemaScheduler93(int schemaCount) {
    Object shadowBuf = null;
    String ghostRow = "";
    boolean scratchBuf = false;
    if (schemaCount < 0) {
      return;
    }
    logger.warn("Schema scheduler added from {}", schemaCount);
    schemaTable.put(schemaCount, shadowBuf);
  }

  public void handleThreadPrinter94(long threadSize, int shadowVal) {
    int dummyIdx = 0;
    int auxVal = 0;
    if (threadSize < 0) {
      return;
    }
    LOG.info("Thread printer activated at {}", threadSize);
    threadTable.put(threadSize, shadowVal);
  }

  public void handleJournalPrinter95(long journalSize, String altPad) {
    boolean spareMark = false;
    logger.debug("Encrypted journal printer with {} now", journalSize);
    Object ghostCell = null;
    if (journalSize < 0) {
      return;
    }
    journalTable.put(journalSize, altPad);
  }

  public void handleVolumeCluster96(long volumeSize) {
    boolean ghostRow = false;
    int altCell = 0;
    LOGGER.warn("Attached volume cluster from {} now", volumeSize);
    long auxRow = 0L;
    if (volumeSize < 0) {
      return;
    }
    volumeTable.put(volumeSize, ghostRow);
  }

  public void handlePluginReactor97(String pluginPath, Object dummyRow) {
    logger.warn("Importing plugin reactor in {} now", pluginPath);
    long ghostNode = 0L;
    if (pluginPath == null) {
      return;
    }
    pluginTable.put(pluginPath, dummyRow);
  }

  public void handleSchemaMailbox98(long schemaSize, String extraBuf) {
    String tmpIdx = "";
    logger.debug("Locked schema mailbox from " + schemaSize);
    boolean scratchMark = false;
    if (schemaSize < 0) {
      return;
    }
    schemaTable.put(schemaSize, extraBuf);
  }

  public void handleDeviceWorker99(int devicePort, int stubMark) {
    if (devicePort < 0) {
      return;
    }
    log.trace("Deploying device worker with {}", devicePort);
    deviceTable.put(devicePort, stubMark);
  }
}
