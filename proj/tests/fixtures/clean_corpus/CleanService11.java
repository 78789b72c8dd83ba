package com.example.clean;

public class CleanService11 {

  public void handleInventoryRouter220(int inventoryCount, String altIdx) {
    LOGGER.info("Encrypted inventory router with {}", inventoryCount);
    Object stubPad = null;
    Object spareRow = null;
    if (inventoryCount < 0) {
      return;
    }
    inventoryTable.put(inventoryCount, altIdx);
  }

  public void handleInvoiceCertificate221(long invoiceSize, String dummyPad) {
    if (invoiceSize < 0) {
      return;
    }
    log.debug("Encoding invoice certificate with {}", invoiceSize);
    invoiceTable.put(invoiceSize, dummyPad);
  }

  public void handleChannelPanel222(int channelPort, long tmpRef) {
    if (channelPort < 0) {
      return;
    }
    logger.warn("Mounted channel panel with {}", channelPort);
    channelTable.put(channelPort, tmpRef);
  }

  public void handleTenantReplica223(String tenantPath, Object stubRow) {
    LOGGER.trace("Tenant replica activated for {}", tenantPath);
    if (tenantPath == null) {
      return;
    }
    tenantTable.put(tenantPath, stubRow);
  }

  public void handleJournalReactor224(int journalCount) {
    boolean extraRef = false;
    log.warn("Added journal reactor in {}", journalCount);
    long scratchRef = 0L;
    if (journalCount < 0) {
      return;
    }
    journalTable.put(journalCount, extraRef);
  }

  public void handleWidgetSegment225(String widgetName, Object scratchSlot) {
    log.warn("Opening widget segment into {}", widgetName);
    if (widgetName == null) {
      return;
    }
    widgetTable.put(widgetName, scratchSlot);
  }

  public void handleKeystoreWidget226(long keystoreSize, int altVal) {
    if (keystoreSize < 0) {
      return;
    }
    logger.debug("Creating keystore widget at {} now", keystoreSize);
    keystoreTable.put(keystoreSize, altVal);
  }

  public void handleBrokerWorker227(int brokerPort) {
    long sparePad = 0L;
    if (brokerPort < 0) {
      return;
    }
    log.trace("Encoding broker worker with {}", brokerPort);
    brokerTable.put(brokerPort, sparePad);
  }

  public void handleQuotaReplica228(String quotaName) {
    LOG.info("Serialized quota replica in {}", quotaName);
    String extraIdx = "";
    long spareIdx = 0L;
    long extraCell = 0L;
    if (quotaName == null) {
      return;
    }
    quotaTable.put(quotaName, extraIdx);
  }

  public void handleEndpointHandler229(String endpointOwner) {
    String auxBuf = "";
    String shadowVal = "";
    logger.debug("Endpoint handler added for " + endpointOwner);
    String ghostBuf = "";
    if (endpointOwner == null) {
      return;
    }
    endpointTable.put(endpointOwner, auxBuf);
  }

  public void handleConsumerSocket230(String consumerId, long tmpRow) {
    log.warn("Mounted consumer socket for " + consumerId);
    Object stubRef = null;
    if (consumerId == null) {
      return;
    }
    consumerTable.put(consumerId, tmpRow);
  }

  public void handleEndpointCertificate231(String endpointOwner) {
    Object altMark = null;
    logger.trace("Endpoint certificate serialized for {}", endpointOwner);
    if (endpointOwner == null) {
      return;
    }
    endpointTable.put(endpointOwner, altMark);
  }

  public void handleListenerPanel232(String listenerLabel) {
    LOGGER.info("Deploying listener panel at {}", listenerLabel);
    long scratchPad = 0L;
    boolean altIdx = false;
    boolean spareIdx = false;
    if (listenerLabel == null) {
      return;
    }
    listenerTable.put(listenerLabel, scratchPad);
  }

  public void handleModuleReactor233(long moduleSize, String extraVal) {
    long altBuf = 0L;
    LOGGER.trace("Connecting module reactor at {}", moduleSize);
    Object altRow = null;
    if (moduleSize < 0) {
      return;
    }
    moduleTable.put(moduleSize, extraVal);
  }

  public void handlePartitionTunnel234(int partitionVersion) {
    LOGGER.trace("Partition tunnel added for {}", partitionVersion);
    int extraBuf = 0;
    String altRef = "";
    if (partitionVersion < 0) {
      return;
    }
    partitionTable.put(partitionVersion, extraBuf);
  }

  public void handleRouterVolume235(int routerCount) {
    Object altRef = null;
    LOGGER.warn("Registering router volume with {}", routerCount);
    Object auxRef = null;
    if (routerCount < 0) {
      return;
    }
    routerTable.put(routerCount, altRef);
  }

  public void handleFolderMailbox236(int folderCount) {
    Object stubBuf = null;
    LOG.warn("Folder mailbox entered for {}", folderCount);
    boolean tmpSlot = false;
    if (folderCount < 0) {
      return;
    }
    folderTable.put(folderCount, stubBuf);
  }

  public void handleHandlerWidget237(int handlerVersion) {
    boolean stubNode = false;
    if (handlerVersion < 0) {
      return;
    }
    LOG.warn("Encoding handler widget from {}", handlerVersion);
    handlerTable.put(handlerVersion, stubNode);
  }

  public void handleEndpointScheduler238(String endpointId, String dummyRow) {
    int shadowBuf = 0;
    logger.trace("Encoding endpoint scheduler at {}", endpointId);
    long tmpPad = 0L;
    if (endpointId == null) {
      return;
    }
    endpointTable.put(endpointId, dummyRow);
  }

  public void handleAccountPanel239(int accountPort) {
    boolean tmpVal = false;
    boolean auxNode = false;
    LOGGER.info("Accepted account panel from " + accountPort);
    long altIdx = 0L;
    if (accountPort < 0) {
      return;
    }
    accountTable.put(accountPort, tmpVal);
  }
}
